// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Non-very-generic bases: minor matrices of set families, explicit witness
// constructions and their perturbation to very generic bases.

#ifndef MSARR_NONVGEN_HPP_
#define MSARR_NONVGEN_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "msarr/msbuild.hpp"
#include "msarr/setfamily.hpp"

namespace msarr {

struct AuditEntry {
  std::string condition;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct WitnessSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string construction;  // "rank3" or "rank-r"
  SetFamily family;
  std::size_t target_codim = 0;
  GenericArrangement<Rational> witness_base;
  std::vector<AuditEntry> audit;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;

  bool verified() const;
};

struct WitnessOptions {
  long bound = 50;
  std::size_t retries = 200;
};

// Throws std::invalid_argument naming the violated condition: (Q1) members
// have >= k+1 elements, (Q2) no k-subset lies in two members.
void check_q1_q2(const SetFamily& f);

// Rows alpha_{I(T,j)} for T in f (in family order), j = 1..|T|-k.
Matrix<Rational> a_family_matrix(const GenericArrangement<Rational>& g, const SetFamily& f);

// rank(a_family_matrix) <= r.
bool in_variety(const GenericArrangement<Rational>& g, const SetFamily& f, std::size_t r);

// {[n]\{1,2}, [n]\{3,4}, [n]\{5,6}} for n - k = 3.
SetFamily rank3_family(std::size_t n, std::size_t k);
// Delta_{125e} Delta_{346e} - Delta_{126e} Delta_{345e}, e = [n] \ [6].
Rational rank3_equation(const Matrix<Rational>& g);

// c(i) for i = 1..r-1 (entry i-1), values in {r, r+1, r+2}.
std::vector<std::size_t> cyclic_map_c(std::size_t r);
// I^c_1..I^c_r for r = n - k.
SetFamily rank_r_family(std::size_t n, std::size_t k);
// -(prod_{i<=r-2} Delta_{i+1,c(i),e}) Delta_{1,c(r-1),e} + prod_{i<=r-1} Delta_{i,c(i),e},
// e = [n] \ [r+2].
Rational rank_r_equation(const Matrix<Rational>& g);

// Seeded searches; throw RetryExhausted after opt.retries failures.
WitnessSpec witness_rank3(std::size_t n, std::size_t k, std::uint64_t seed,
                          const WitnessOptions& opt = {});
WitnessSpec witness_rank_r(std::size_t n, std::size_t k, std::uint64_t seed,
                           const WitnessOptions& opt = {});

struct PerturbResult {
  MSArrangement<Rational> ms;
  std::vector<Mask> coincident;  // subsets I whose hyperplanes met in the witness
  std::size_t attempts = 0;
};

// base + (random integers in [-bound, bound]) / denom until very generic.
PerturbResult perturb_to_very_generic(const WitnessSpec& w, std::uint64_t denom,
                                      std::uint64_t seed, std::size_t retries = 50,
                                      long bound = 50);

struct SimpleChamberPick {
  Mask chamber = 0;     // sign mask on the essentialized arrangement
  Mask walls = 0;       // hyperplane indices
  bool walls_match = false;  // walls are exactly the coincident hyperplanes
  std::size_t simple_count = 0;
};

// A simple chamber of the essentialized arrangement, preferring one whose
// walls are the given hyperplanes.
std::optional<SimpleChamberPick> pick_simple_chamber(const CentralArrangement<Rational>& ess,
                                                     Mask preferred_walls,
                                                     std::size_t guard = kChamberGuard);

// Cone of the affine arrangement alpha_i(x) = t_i: normals (alpha_i, -t_i)
// and the hyperplane at infinity e_{k+1}, labelled 1..n+1.
CentralArrangement<Rational> coned_arrangement(const GenericArrangement<Rational>& g,
                                               const Vec<Rational>& t);

// Random integer combination of a basis of X, off every hyperplane not
// containing X.
Vec<Rational> generic_point(const CentralArrangement<Rational>& a, const Flat<Rational>& x,
                            std::mt19937_64& rng, long bound = 20);

}  // namespace msarr

#endif  // MSARR_NONVGEN_HPP_
