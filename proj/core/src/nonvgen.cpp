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

#include "msarr/nonvgen.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "msarr/sigma.hpp"

namespace msarr {

namespace {

Mask one_based(std::initializer_list<std::size_t> elems) {
  Mask m = 0;
  for (auto e : elems) m |= bit(e - 1);
  return m;
}

Rational delta(const Matrix<Rational>& g, Mask cols) { return minor_det(g, cols); }

std::string labels_text(const std::vector<Mask>& sets, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? "," : "") + subset_label(sets[i], n);
  return s;
}

AuditEntry entry(std::string condition, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  return {std::move(condition), std::move(expected), std::move(actual), ok};
}

std::size_t rows_rank(const GenericArrangement<Rational>& g, const std::vector<Mask>& Is) {
  Matrix<Rational> m(0, g.n());
  for (Mask I : Is) m.append_row(alpha_I(g, I));
  return rank(m);
}

// Every (k+1)-subset whose normal lies in the span of the given ones.
std::vector<Mask> hyperplanes_through(const GenericArrangement<Rational>& g,
                                      const std::vector<Mask>& Is) {
  std::vector<Vec<Rational>> rows;
  for (Mask I : Is) rows.push_back(alpha_I(g, I));
  const auto e = rref_of_rows(rows, g.n());
  std::vector<Mask> out;
  for (Mask J : k_subsets(g.n(), g.k() + 1))
    if (e.contains(alpha_I(g, J))) out.push_back(J);
  return out;
}

std::string subset_text(std::size_t j_mask, std::size_t r) {
  std::string s = "{";
  bool first = true;
  for (std::size_t j = 0; j < r; ++j) {
    if (j_mask >> j & 1) {
      s += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
    }
  }
  return s + "}";
}

using Equation = std::function<Rational(const Matrix<Rational>&)>;
using Auditor = std::function<std::vector<AuditEntry>(const GenericArrangement<Rational>&)>;

// The defining equations are linear and homogeneous in alpha_1 once the
// other columns are fixed, so they are c . alpha_1 with c read off at the
// unit vectors. alpha_1 is a random vector projected onto c^perp.
WitnessSpec search(std::size_t n, std::size_t k, const std::string& construction,
                   const SetFamily& family, std::size_t target, std::uint64_t seed,
                   const WitnessOptions& opt, const Equation& eq, const Auditor& audit) {
  check_q1_q2(family);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-opt.bound, opt.bound);
  for (std::size_t attempt = 1; attempt <= opt.retries; ++attempt) {
    Matrix<Rational> m = random_integer_matrix(k, n, rng, opt.bound);
    Vec<Rational> c(k);
    for (std::size_t j = 0; j < k; ++j) {
      Matrix<Rational> probe = m;
      for (std::size_t i = 0; i < k; ++i) probe(i, 0) = Rational(i == j ? 1 : 0);
      c[j] = eq(probe);
    }
    Vec<Rational> v(k);
    for (auto& x : v) x = Rational(dist(rng));
    if (is_zero_vector(c)) continue;
    const Rational cc = dot(c, c), cv = dot(c, v);
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      m(i, 0) = cc * v[i] - cv * c[i];
      if (!m(i, 0).is_zero()) nonzero = true;
    }
    if (!nonzero || !is_generic(m)) continue;
    GenericArrangement<Rational> g(m);
    auto entries = audit(g);
    const bool ok = std::all_of(entries.begin(), entries.end(),
                                [](const AuditEntry& e) { return e.ok; });
    if (!ok) continue;
    WitnessSpec w{n, k, construction, family, target, g, std::move(entries), seed, attempt};
    return w;
  }
  throw RetryExhausted(construction + " witness for (n,k) = (" + std::to_string(n) + "," +
                       std::to_string(k) + ") not found in " + std::to_string(opt.retries) +
                       " attempts; reseed");
}

}  // namespace

bool WitnessSpec::verified() const {
  return !audit.empty() &&
         std::all_of(audit.begin(), audit.end(), [](const AuditEntry& e) { return e.ok; });
}

void check_q1_q2(const SetFamily& f) {
  for (Mask t : f.members()) {
    if (static_cast<std::size_t>(popcount(t)) < f.k() + 1) {
      throw std::invalid_argument("(Q1) fails: member " + subset_label(t, f.n()) +
                                  " has fewer than k+1 elements");
    }
  }
  const auto& mem = f.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (static_cast<std::size_t>(popcount(mem[i] & mem[j])) >= f.k()) {
        throw std::invalid_argument("(Q2) fails: members " + subset_label(mem[i], f.n()) +
                                    " and " + subset_label(mem[j], f.n()) +
                                    " share a k-subset");
      }
}

Matrix<Rational> a_family_matrix(const GenericArrangement<Rational>& g, const SetFamily& f) {
  if (f.n() != g.n() || f.k() != g.k()) throw std::invalid_argument("family and base differ in (n,k)");
  check_q1_q2(f);
  Matrix<Rational> m(0, g.n());
  for (Mask T : f.members())
    for (auto& r : d_flat_rows(g, T)) m.append_row(r);
  return m;
}

bool in_variety(const GenericArrangement<Rational>& g, const SetFamily& f, std::size_t r) {
  return rank(a_family_matrix(g, f)) <= r;
}

SetFamily rank3_family(std::size_t n, std::size_t k) {
  if (n != k + 3 || k < 3) throw std::invalid_argument("rank3 witness needs n - k = 3, k >= 3");
  const Mask all = full_mask(n);
  return SetFamily(n, k, {all & ~one_based({1, 2}), all & ~one_based({3, 4}), all & ~one_based({5, 6})});
}

Rational rank3_equation(const Matrix<Rational>& g) {
  const std::size_t n = g.cols();
  const Mask eta = full_mask(n) & ~full_mask(6);
  return delta(g, one_based({1, 2, 5}) | eta) * delta(g, one_based({3, 4, 6}) | eta) -
         delta(g, one_based({1, 2, 6}) | eta) * delta(g, one_based({3, 4, 5}) | eta);
}

std::vector<std::size_t> cyclic_map_c(std::size_t r) {
  if (r < 4) throw std::invalid_argument("cyclic map needs r >= 4");
  std::vector<std::size_t> c(r - 1);
  const std::size_t m = r - 1;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t v;
    if (m % 2 == 1) {
      v = i == 1 ? r : (i % 2 == 0 ? r + 1 : r + 2);
    } else if (m == 4) {
      v = (i == 1 || i == 3) ? 5 : (i == 2 ? 6 : 7);
    } else {
      v = (i == 1 || i == 3) ? r : (i % 2 == 0 ? r + 1 : r + 2);
    }
    c[i - 1] = v;
  }
  return c;
}

SetFamily rank_r_family(std::size_t n, std::size_t k) {
  if (n < k + 4 || k < 2) throw std::invalid_argument("rank-r witness needs n - k >= 4, k >= 2");
  const std::size_t r = n - k;
  const auto c = cyclic_map_c(r);
  const Mask eta = full_mask(n) & ~full_mask(r + 2);
  std::vector<Mask> sets;
  for (std::size_t i = 1; i <= r - 2; ++i) sets.push_back(one_based({i, i + 1, c[i - 1]}) | eta);
  sets.push_back(one_based({r - 1, 1, c[r - 2]}) | eta);
  sets.push_back(one_based({r, r + 1, r + 2}) | eta);
  return SetFamily(n, k, std::move(sets));
}

Rational rank_r_equation(const Matrix<Rational>& g) {
  const std::size_t n = g.cols(), k = g.rows(), r = n - k;
  const auto c = cyclic_map_c(r);
  const Mask eta = full_mask(n) & ~full_mask(r + 2);
  Rational first(1), second(1);
  for (std::size_t i = 1; i <= r - 2; ++i) first *= delta(g, one_based({i + 1, c[i - 1]}) | eta);
  first *= delta(g, one_based({1, c[r - 2]}) | eta);
  for (std::size_t i = 1; i <= r - 1; ++i) second *= delta(g, one_based({i, c[i - 1]}) | eta);
  return second - first;
}

WitnessSpec witness_rank3(std::size_t n, std::size_t k, std::uint64_t seed,
                          const WitnessOptions& opt) {
  const SetFamily fam = rank3_family(n, k);
  // Keep the construction order I1, I2, I3 for reporting.
  const Mask all = full_mask(n);
  const std::vector<Mask> Is{all & ~one_based({1, 2}), all & ~one_based({3, 4}),
                             all & ~one_based({5, 6})};
  auto audit = [&](const GenericArrangement<Rational>& g) {
    std::vector<AuditEntry> a;
    a.push_back(entry("generic base", "true", "true"));
    a.push_back(entry("defining equation", "0", rank3_equation(g.matrix()).str()));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        a.push_back(entry("codim D_I" + std::to_string(i + 1) + " cap D_I" + std::to_string(j + 1),
                          "2", std::to_string(rows_rank(g, {Is[i], Is[j]}))));
    a.push_back(entry("codim D_I1 cap D_I2 cap D_I3", "2", std::to_string(rows_rank(g, Is))));
    auto through = hyperplanes_through(g, Is);
    std::vector<Mask> expect = Is;
    std::sort(expect.begin(), expect.end());
    std::sort(through.begin(), through.end());
    a.push_back(entry("hyperplanes through the intersection", labels_text(expect, n),
                      labels_text(through, n)));
    a.push_back(entry("in V(T,2)", "true", in_variety(g, fam, 2) ? "true" : "false"));
    return a;
  };
  return search(n, k, "rank3", fam, 2, seed, opt, rank3_equation, audit);
}

WitnessSpec witness_rank_r(std::size_t n, std::size_t k, std::uint64_t seed,
                           const WitnessOptions& opt) {
  const SetFamily fam = rank_r_family(n, k);
  const std::size_t r = n - k;
  const auto c = cyclic_map_c(r);
  const Mask eta = full_mask(n) & ~full_mask(r + 2);
  std::vector<Mask> Is;
  for (std::size_t i = 1; i <= r - 2; ++i) Is.push_back(one_based({i, i + 1, c[i - 1]}) | eta);
  Is.push_back(one_based({r - 1, 1, c[r - 2]}) | eta);
  Is.push_back(one_based({r, r + 1, r + 2}) | eta);
  auto audit = [&](const GenericArrangement<Rational>& g) {
    std::vector<AuditEntry> a;
    a.push_back(entry("generic base", "true", "true"));
    a.push_back(entry("defining equation", "0", rank_r_equation(g.matrix()).str()));
    const std::size_t full = (std::size_t{1} << r) - 1;
    for (std::size_t J = 1; J < full; ++J) {
      std::vector<Mask> sel;
      for (std::size_t j = 0; j < r; ++j)
        if (J >> j & 1) sel.push_back(Is[j]);
      a.push_back(entry("codim of intersection over J = " + subset_text(J, r),
                        std::to_string(sel.size()), std::to_string(rows_rank(g, sel))));
    }
    a.push_back(entry("codim of full intersection", std::to_string(r - 1),
                      std::to_string(rows_rank(g, Is))));
    auto through = hyperplanes_through(g, Is);
    std::vector<Mask> expect = Is;
    std::sort(expect.begin(), expect.end());
    std::sort(through.begin(), through.end());
    a.push_back(entry("hyperplanes through the intersection", labels_text(expect, n),
                      labels_text(through, n)));
    return a;
  };
  return search(n, k, "rank-r", fam, r - 1, seed, opt, rank_r_equation, audit);
}

PerturbResult perturb_to_very_generic(const WitnessSpec& w, std::uint64_t denom,
                                      std::uint64_t seed, std::size_t retries, long bound) {
  if (!w.verified()) throw std::invalid_argument("witness audit has failing entries");
  if (denom == 0) throw std::invalid_argument("denom must be positive");
  std::mt19937_64 rng(seed);
  const Rational scale(mpq_class(mpz_class(1), mpz_class(std::to_string(denom))));
  std::string last;
  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    Matrix<Rational> m = w.witness_base.matrix();
    const auto noise = random_integer_matrix(m.rows(), m.cols(), rng, bound);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += noise(i, j) * scale;
    if (!is_generic(m)) {
      last = "non-generic perturbation";
      continue;
    }
    auto ms = build_ms(m);
    auto vg = is_very_generic(ms);
    if (vg.very_generic) return {std::move(ms), w.family.members(), attempt};
    last = "flat " + vg.presentation->str() + " is not very generic";
  }
  throw RetryExhausted("perturbation stayed non-very-generic after " + std::to_string(retries) +
                       " attempts (" + last + "); try a smaller denom or another seed");
}

std::optional<SimpleChamberPick> pick_simple_chamber(const CentralArrangement<Rational>& ess,
                                                     Mask preferred_walls, std::size_t guard) {
  const auto simple = find_simple_chambers(ess, guard);
  if (simple.empty()) return std::nullopt;
  const auto& table = ess.chambers(guard);
  std::optional<SimpleChamberPick> first;
  for (Mask c : simple) {
    const Mask w = wall_mask(table, c, ess.size());
    SimpleChamberPick p{c, w, w == preferred_walls, simple.size()};
    if (p.walls_match) return p;
    if (!first) first = p;
  }
  return first;
}

CentralArrangement<Rational> coned_arrangement(const GenericArrangement<Rational>& g,
                                               const Vec<Rational>& t) {
  if (t.size() != g.n()) throw std::invalid_argument("translation vector has wrong length");
  std::vector<std::string> labels;
  std::vector<Vec<Rational>> normals;
  for (std::size_t i = 0; i < g.n(); ++i) {
    Vec<Rational> v = g.column(i);
    v.push_back(-t[i]);
    normals.push_back(std::move(v));
    labels.push_back(std::to_string(i + 1));
  }
  Vec<Rational> inf(g.k() + 1, Rational(0));
  inf.back() = Rational(1);
  normals.push_back(std::move(inf));
  labels.push_back(std::to_string(g.n() + 1));
  return CentralArrangement<Rational>(g.k() + 1, std::move(labels), std::move(normals));
}

Vec<Rational> generic_point(const CentralArrangement<Rational>& a, const Flat<Rational>& x,
                            std::mt19937_64& rng, long bound) {
  const auto basis = kernel_basis(x.normal_space.basis);
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec<Rational> t(a.dim(), Rational(0));
    for (const auto& b : basis) {
      const Rational c(dist(rng));
      for (std::size_t j = 0; j < a.dim(); ++j) t[j] += c * b[j];
    }
    bool ok = true;
    for (std::size_t h = 0; h < a.size() && ok; ++h)
      if (!(x.mask >> h & 1) && dot(a.normal(h), t).is_zero()) ok = false;
    if (ok) return t;
  }
  throw RetryExhausted("no generic point found on flat");
}

}  // namespace msarr
