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

// The poset P(n,k) of set families and its comparison with B(n,k) lattices.

#ifndef MSARR_PNK_HPP_
#define MSARR_PNK_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "msarr/msbuild.hpp"
#include "msarr/setfamily.hpp"

namespace msarr {

struct PnkCheck {
  bool member = true;
  std::string condition;     // "i", "ii" or "iii" when member is false
  std::vector<Mask> witness; // offending member(s) or sub-collection
};

// (i) members have >= k+1 elements, (ii) antichain, (iii) for every
// sub-collection of size >= 2, |union| - k > sum (|T| - k).
PnkCheck is_pnk_element(const SetFamily& f);

// Sum of (|T| - k); throws std::invalid_argument for non-elements.
std::size_t pnk_rank(const SetFamily& f);

// Elements of rank <= max_rank, indexed by rank, each level in canonical
// order. Includes the empty family at rank 0. Requires n <= 8.
std::vector<std::vector<SetFamily>> enumerate_pnk(std::size_t n, std::size_t k,
                                                  std::size_t max_rank);

// T ⪯ T' iff every member of T lies inside some member of T'.
bool pnk_leq(const SetFamily& a, const SetFamily& b);

// The flat of B(n,k,A0) given by the intersection of D_T over T in f.
template <OrderedField F>
Flat<F> family_flat(const MSArrangement<F>& m, const SetFamily& f) {
  std::vector<Vec<F>> rows;
  for (Mask T : f.members()) {
    auto r = d_flat_rows(m.base, T);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  Flat<F> x;
  x.normal_space = rref_of_rows(rows, m.n());
  x.mask = detail::closure_mask(x.normal_space, m.arrangement.normals());
  x.closed_set = mask_elements(x.mask);
  x.codim = x.normal_space.rank();
  return x;
}

struct PnkComparison {
  bool isomorphic = true;
  // The first failure found, and every distinct failure in P(n,k) order.
  std::optional<SetFamily> counterexample;
  std::string reason;
  std::vector<SetFamily> counterexamples;
};

// Checks that T -> intersection of D_T is a rank-preserving bijection from
// P(n,k) onto the intersection lattice.
template <OrderedField F>
PnkComparison lattice_isomorphic_to_pnk(const MSArrangement<F>& m) {
  const auto& lat = m.arrangement.lattice();
  const auto levels = enumerate_pnk(m.n(), m.k(), m.arrangement.rank());
  PnkComparison out;
  auto fail = [&](SetFamily t, const char* reason) {
    if (out.isomorphic) {
      out.isomorphic = false;
      out.counterexample = t;
      out.reason = reason;
    }
    if (std::find(out.counterexamples.begin(), out.counterexamples.end(), t) ==
        out.counterexamples.end()) {
      out.counterexamples.push_back(std::move(t));
    }
  };
  std::unordered_map<Mask, SetFamily> preimage;
  for (const auto& level : levels) {
    for (const auto& t : level) {
      const Flat<F> x = family_flat(m, t);
      const Flat<F>* in_lattice = lat.find(x.mask);
      if (!in_lattice || in_lattice->codim != pnk_rank(t)) {
        fail(t, "codimension differs from rank");
        continue;
      }
      if (!preimage.emplace(x.mask, t).second) {
        fail(canonical_presentation(m, *in_lattice), "two families meet in the same flat");
      }
    }
  }
  for (const auto* x : lat.all()) {
    if (!preimage.count(x->mask)) fail(canonical_presentation(m, *x), "flat outside the image");
  }
  return out;
}

}  // namespace msarr

#endif  // MSARR_PNK_HPP_
