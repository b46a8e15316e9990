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

// Consistency of sign vectors, the Sigma filtration, jump witnesses and
// simple chambers.

#ifndef MSARR_SIGMA_HPP_
#define MSARR_SIGMA_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msarr/arrangement.hpp"

namespace msarr {

template <OrderedField F>
bool verify_gordan(const CentralArrangement<F>& a, const SignVector& eps,
                   const GordanCertificate<F>& c) {
  if (c.support.empty() || c.support.size() != c.lambda.size()) return false;
  if (eps.size() != a.size()) return false;
  Vec<F> sum(a.dim(), F(0));
  for (std::size_t i = 0; i < c.support.size(); ++i) {
    const std::size_t h = c.support[i];
    if (h >= a.size() || c.lambda[i].sign() <= 0) return false;
    const F w = eps[h] > 0 ? c.lambda[i] : -c.lambda[i];
    for (std::size_t j = 0; j < a.dim(); ++j) sum[j] += w * a.normal(h)[j];
  }
  return is_zero_vector(sum);
}

// eps_H alpha_H(x) > 0 for every H in `members`.
template <OrderedField F>
bool verify_interior_point(const CentralArrangement<F>& a, const SignVector& eps,
                           const std::vector<std::size_t>& members, const Vec<F>& x) {
  for (auto h : members) {
    if (dot(a.normal(h), x).sign() * eps[h] <= 0) return false;
  }
  return true;
}

template <OrderedField F>
struct ConsistencyResult {
  bool consistent = false;
  Vec<F> point;                                  // when consistent
  std::optional<GordanCertificate<F>> certificate;  // when not
};

namespace detail {

template <OrderedField F>
ConsistencyResult<F> consistent_at_unchecked(const CentralArrangement<F>& a,
                                             const SignVector& eps, const Flat<F>& x) {
  ConsistencyResult<F> out;
  if (x.closed_set.empty()) {
    out.consistent = true;
    out.point.assign(a.dim(), F(0));
    return out;
  }
  // Work in coordinates of X^perp; the pivot map is injective there.
  Matrix<F> rows(x.closed_set.size(), x.codim);
  for (std::size_t i = 0; i < x.closed_set.size(); ++i) {
    const std::size_t h = x.closed_set[i];
    const Vec<F> c = x.normal_space.coordinates(a.normal(h));
    for (std::size_t j = 0; j < x.codim; ++j) rows(i, j) = eps[h] > 0 ? c[j] : -c[j];
  }
  auto res = strict_feasibility(rows);
  if (res.has_point()) {
    out.consistent = true;
    out.point = x.normal_space.lift(res.point());
    if (!verify_interior_point(a, eps, x.closed_set, out.point)) {
      throw std::logic_error("consistency point failed exact check");
    }
    return out;
  }
  GordanCertificate<F> cert;
  for (std::size_t i = 0; i < res.certificate().rows.size(); ++i) {
    cert.support.push_back(x.closed_set[res.certificate().rows[i]]);
    cert.lambda.push_back(res.certificate().lambda[i]);
  }
  if (!verify_gordan(a, eps, cert)) {
    throw std::logic_error("Gordan certificate failed exact check");
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

template <OrderedField F>
ConsistencyResult<F> consistent_at(const CentralArrangement<F>& a, const SignVector& eps,
                                   const Flat<F>& x) {
  a.check_sign_vector(eps);
  return detail::consistent_at_unchecked(a, eps, require_flat(a, x));
}

template <OrderedField F>
struct SigmaReport {
  SignVector sign_vector;
  std::size_t level_tested = 0;
  bool member = false;
  std::optional<Flat<F>> failing_flat;
  std::optional<GordanCertificate<F>> certificate;
  // Audited flats (closed-set mask) with their interior points.
  std::vector<std::pair<Mask, Vec<F>>> witness_points;
  std::size_t flats_checked = 0;
};

inline std::size_t sigma_level(std::size_t p, std::size_t rank) {
  if (p == 0) throw std::invalid_argument("p must be at least 1");
  return std::min(p, rank);
}

// Membership in Sigma_p by one strict-feasibility solve per flat of codim
// exactly min(p, rank).
template <OrderedField F>
SigmaReport<F> in_sigma_p(const CentralArrangement<F>& a, const SignVector& eps,
                          std::size_t p, bool audit = false) {
  a.check_sign_vector(eps);
  SigmaReport<F> rep;
  rep.sign_vector = eps;
  rep.level_tested = sigma_level(p, a.rank());
  rep.member = true;
  for (const auto& x : a.lattice().level(rep.level_tested)) {
    ++rep.flats_checked;
    auto res = detail::consistent_at_unchecked(a, eps, x);
    if (!res.consistent) {
      rep.member = false;
      rep.failing_flat = x;
      rep.certificate = std::move(res.certificate);
      rep.witness_points.clear();
      return rep;
    }
    if (audit) rep.witness_points.emplace_back(x.mask, std::move(res.point));
  }
  return rep;
}

// Sigma_p as a lookup structure: for every flat of codim min(p, rank) the
// set of sign patterns realized by chambers of its localization.
template <OrderedField F>
class SigmaEngine {
 public:
  SigmaEngine(const CentralArrangement<F>& a, std::size_t p,
              std::size_t guard = kChamberGuard)
      : n_(a.size()), level_(sigma_level(p, a.rank())) {
    for (const auto& x : a.lattice().level(level_)) {
      if (x.closed_set.empty()) continue;
      if (x.closed_set.size() > guard) {
        throw GuardExceeded("localization with " + std::to_string(x.closed_set.size()) +
                            " hyperplanes exceeds the limit of " + std::to_string(guard));
      }
      Table t;
      t.members = x.closed_set;
      t.mask = x.mask;
      t.trigger = t.members.back();
      const std::size_t m = t.members.size();
      t.bits.assign(((std::size_t{1} << m) + 63) / 64, 0);
      const auto loc = subarrangement(a, x.mask);
      for (Mask c : loc.chambers(guard).masks) t.bits[c >> 6] |= std::uint64_t{1} << (c & 63);
      tables_.push_back(std::move(t));
    }
    by_trigger_.assign(n_, {});
    for (std::size_t i = 0; i < tables_.size(); ++i) by_trigger_[tables_[i].trigger].push_back(i);
  }

  std::size_t level() const { return level_; }
  std::size_t flat_count() const { return tables_.size(); }

  // Closed-set mask of the first flat where eps fails, if any.
  std::optional<Mask> first_failure(Mask eps) const {
    for (const auto& t : tables_)
      if (!t.accepts(eps)) return t.mask;
    return std::nullopt;
  }
  bool contains(Mask eps) const { return !first_failure(eps); }
  bool contains(const SignVector& eps) const { return contains(eps.mask()); }

  // All members, sorted by mask.
  std::vector<Mask> enumerate(std::size_t guard = kChamberGuard) const {
    if (n_ > guard) {
      throw GuardExceeded("Sigma enumeration: " + std::to_string(n_) +
                          " hyperplanes exceed the limit of " + std::to_string(guard));
    }
    std::vector<Mask> out;
    dfs(0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Table {
    std::vector<std::size_t> members;
    Mask mask = 0;
    std::size_t trigger = 0;
    std::vector<std::uint64_t> bits;

    bool accepts(Mask eps) const {
      std::size_t pat = 0;
      for (std::size_t j = 0; j < members.size(); ++j) pat |= ((eps >> members[j]) & 1) << j;
      return (bits[pat >> 6] >> (pat & 63)) & 1;
    }
  };

  void dfs(std::size_t h, Mask eps, std::vector<Mask>& out) const {
    if (h == n_) {
      out.push_back(eps);
      return;
    }
    for (Mask choice : {Mask{0}, bit(h)}) {
      const Mask e = eps | choice;
      bool ok = true;
      for (auto t : by_trigger_[h]) {
        if (!tables_[t].accepts(e)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(h + 1, e, out);
    }
  }

  std::size_t n_;
  std::size_t level_;
  std::vector<Table> tables_;
  std::vector<std::vector<std::size_t>> by_trigger_;
};

template <OrderedField F>
std::vector<SignVector> sigma_set(const CentralArrangement<F>& a, std::size_t p,
                                  std::size_t guard = kChamberGuard) {
  std::vector<SignVector> out;
  for (Mask m : SigmaEngine<F>(a, p, guard).enumerate(guard))
    out.push_back(SignVector::from_mask(m, a.size()));
  return out;
}

// Hyperplanes whose flip leads to another chamber.
template <OrderedField F>
Mask wall_mask(const ChamberTable<F>& table, Mask chamber, std::size_t n) {
  Mask w = 0;
  for (std::size_t h = 0; h < n; ++h)
    if (table.contains(chamber ^ bit(h))) w |= bit(h);
  return w;
}

template <OrderedField F>
std::vector<std::size_t> walls(const CentralArrangement<F>& a, const SignVector& chamber,
                               std::size_t guard = kChamberGuard) {
  a.check_sign_vector(chamber);
  const auto& table = a.chambers(guard);
  if (!table.contains(chamber.mask())) {
    throw std::invalid_argument("sign vector " + chamber.str() + " is not a chamber");
  }
  return mask_elements(wall_mask(table, chamber.mask(), a.size()));
}

namespace detail {

template <OrderedField F>
bool walls_independent(const CentralArrangement<F>& a, Mask w) {
  Matrix<F> m(0, a.dim());
  for (auto h : mask_elements(w)) m.append_row(a.normal(h));
  return rank(m) == static_cast<std::size_t>(popcount(w));
}

// No nonzero x in the closed chamber with alpha_H(x) = 0 for a non-wall H.
// Every nonzero x in the closure is positive on some wall, so pinning each
// wall in turn covers all of them.
template <OrderedField F>
bool nonwalls_avoid_closure(const CentralArrangement<F>& a, const SignVector& chamber, Mask w) {
  Matrix<F> geq(0, a.dim());
  for (std::size_t h = 0; h < a.size(); ++h)
    geq.append_row(chamber[h] > 0 ? a.normal(h) : scaled(a.normal(h), F(-1)));
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (w >> h & 1) continue;
    Matrix<F> eq(0, a.dim());
    eq.append_row(a.normal(h));
    for (auto pin : mask_elements(w)) {
      if (mixed_feasibility(eq, geq, pin, F(1))) return false;
    }
  }
  return true;
}

// The extreme rays of the simplicial cone cut out by the walls; a non-wall
// meets the closure away from 0 iff it vanishes on one of them.
template <OrderedField F>
bool nonwalls_avoid_rays(const CentralArrangement<F>& a, const SignVector& chamber, Mask w) {
  const auto wl = mask_elements(w);
  const std::size_t l = a.dim();
  Matrix<F> aug(l, 2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const F& v = a.normal(wl[i])[j];
      aug(i, j) = chamber[wl[i]] > 0 ? v : -v;
    }
    aug(i, l + i) = F(1);
  }
  const auto e = rref(aug);
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (w >> h & 1) continue;
    for (std::size_t i = 0; i < l; ++i) {
      F s(0);
      for (std::size_t j = 0; j < l; ++j) s += a.normal(h)[j] * e.basis(j, l + i);
      if (s.is_zero()) return false;
    }
  }
  return true;
}

template <OrderedField F>
void require_essential(const CentralArrangement<F>& a) {
  if (!a.is_essential()) {
    throw std::invalid_argument("arrangement is not essential; essentialize first");
  }
}

}  // namespace detail

template <OrderedField F>
bool is_simple_chamber(const CentralArrangement<F>& a, const SignVector& chamber,
                       std::size_t guard = kChamberGuard) {
  detail::require_essential(a);
  const Mask w = mask_of(walls(a, chamber, guard));
  if (static_cast<std::size_t>(popcount(w)) != a.rank()) return false;
  if (!detail::walls_independent(a, w)) return false;
  return detail::nonwalls_avoid_closure(a, chamber, w);
}

// Simple chambers as sign masks, sorted.
template <OrderedField F>
std::vector<Mask> find_simple_chambers(const CentralArrangement<F>& a,
                                       std::size_t guard = kChamberGuard) {
  detail::require_essential(a);
  const auto& table = a.chambers(guard);
  std::vector<Mask> out;
  for (Mask c : table.masks) {
    const Mask w = wall_mask(table, c, a.size());
    if (static_cast<std::size_t>(popcount(w)) != a.rank()) continue;
    if (!detail::walls_independent(a, w)) continue;
    const SignVector sv = SignVector::from_mask(c, a.size());
    if (!detail::nonwalls_avoid_rays(a, sv, w)) continue;
    if (!detail::nonwalls_avoid_closure(a, sv, w)) {
      throw std::logic_error("simple-chamber ray test disagrees with cone test");
    }
    out.push_back(c);
  }
  return out;
}

template <OrderedField F>
SignVector epsilon_C(const CentralArrangement<F>& a, const SignVector& simple_chamber,
                     std::size_t guard = kChamberGuard) {
  if (!is_simple_chamber(a, simple_chamber, guard)) {
    throw std::invalid_argument("sign vector " + simple_chamber.str() +
                                " is not a simple chamber");
  }
  return simple_chamber.flipped(mask_of(walls(a, simple_chamber, guard)));
}

template <OrderedField F>
struct JumpWitness {
  SignVector eps;
  Flat<F> failing_flat;
  GordanCertificate<F> certificate;
  std::string source;                // "epsilon-C" or "exhaustive"
  std::optional<Mask> localized_at;  // flat whose localization gave eps^C
  std::optional<Mask> simple_chamber;
};

struct JumpSearchOptions {
  bool epsilon_c_first = true;
  bool exhaustive = true;
  std::size_t guard = kChamberGuard;
};

namespace detail {

// A point of X off every hyperplane not containing X: x(t) = sum t^i b_i
// for the first integer t that works. The values alpha_H(x(t)) are nonzero
// polynomials in t, so some t <= (#H)(dim X) + 1 succeeds.
template <OrderedField F>
Vec<F> generic_point_of_flat(const CentralArrangement<F>& a, const Flat<F>& x) {
  const std::vector<Vec<F>> b = kernel_basis(x.normal_space.basis);
  const std::size_t limit = a.size() * std::max<std::size_t>(b.size(), 1) + 2;
  for (std::size_t t = 1; t <= limit; ++t) {
    Vec<F> pt(a.dim(), F(0));
    F pw(1);
    for (const auto& v : b) {
      for (std::size_t j = 0; j < a.dim(); ++j) pt[j] += pw * v[j];
      pw *= F(static_cast<long>(t));
    }
    bool ok = true;
    for (std::size_t h = 0; h < a.size() && ok; ++h) {
      if (x.mask >> h & 1) continue;
      if (dot(a.normal(h), pt).is_zero()) ok = false;
    }
    if (ok) return pt;
  }
  throw std::logic_error("no generic point found on flat");
}

template <OrderedField F>
std::optional<JumpWitness<F>> confirm_jump(const CentralArrangement<F>& a, const SignVector& eps,
                                           std::size_t p) {
  if (!in_sigma_p(a, eps, p).member) return std::nullopt;
  auto rep = in_sigma_p(a, eps, p + 1);
  if (rep.member) return std::nullopt;
  JumpWitness<F> w;
  w.eps = eps;
  w.failing_flat = *rep.failing_flat;
  w.certificate = *rep.certificate;
  return w;
}

}  // namespace detail

// A sign vector in Sigma_p minus Sigma_{p+1}, or nothing when the sets agree.
// The eps^C search runs over simple chambers of localizations at flats of
// codim p+1; each candidate is extended by the signs of a generic point of
// the flat. The exhaustive pass compares both filtration levels directly.
template <OrderedField F>
std::optional<JumpWitness<F>> find_jump(const CentralArrangement<F>& a, std::size_t p,
                                        const JumpSearchOptions& opt = {}) {
  if (p < 2 || p >= a.rank()) {
    throw std::invalid_argument("find_jump needs 2 <= p < rank");
  }
  if (opt.epsilon_c_first) {
    for (const auto& x : a.lattice().level(p + 1)) {
      if (x.closed_set.size() < p + 2 || x.closed_set.size() > opt.guard) continue;
      const auto loc = essentialize(subarrangement(a, x.mask)).arrangement;
      const auto simple = find_simple_chambers(loc, opt.guard);
      if (simple.empty()) continue;
      std::vector<std::int8_t> outside(a.size(), 1);
      if (x.mask != a.all_mask()) {
        const Vec<F> pt = detail::generic_point_of_flat(a, x);
        for (std::size_t h = 0; h < a.size(); ++h)
          if (!(x.mask >> h & 1)) outside[h] = static_cast<std::int8_t>(dot(a.normal(h), pt).sign());
      }
      for (Mask c : simple) {
        const SignVector lc = SignVector::from_mask(c, loc.size());
        const SignVector le = lc.flipped(wall_mask(loc.chambers(opt.guard), c, loc.size()));
        std::vector<std::int8_t> s(a.size());
        std::size_t j = 0;
        for (std::size_t h = 0; h < a.size(); ++h) s[h] = (x.mask >> h & 1) ? static_cast<std::int8_t>(le[j++]) : outside[h];
        if (auto w = detail::confirm_jump(a, SignVector(std::move(s)), p)) {
          w->source = "epsilon-C";
          w->localized_at = x.mask;
          w->simple_chamber = c;
          return w;
        }
      }
    }
  }
  if (!opt.exhaustive) return std::nullopt;
  if (a.size() > opt.guard) {
    throw GuardExceeded("exhaustive jump search: " + std::to_string(a.size()) +
                        " hyperplanes exceed the limit of " + std::to_string(opt.guard));
  }
  const SigmaEngine<F> lower(a, p, opt.guard), upper(a, p + 1, opt.guard);
  for (Mask m : lower.enumerate(opt.guard)) {
    if (upper.contains(m)) continue;
    auto w = detail::confirm_jump(a, SignVector::from_mask(m, a.size()), p);
    if (!w) throw std::logic_error("Sigma engine disagrees with direct consistency checks");
    w->source = "exhaustive";
    return w;
  }
  return std::nullopt;
}

// Checks Sigma_p(a1 + a2) = Sigma_{min(p,l1)}(a1) x Sigma_{min(p,l2)}(a2).
template <OrderedField F>
bool sigma_product_check(const CentralArrangement<F>& a1, const CentralArrangement<F>& a2,
                         std::size_t p, std::size_t guard = kChamberGuard) {
  if (a1.size() + a2.size() > guard) {
    throw GuardExceeded("product check exceeds the hyperplane limit");
  }
  const auto sum = direct_sum(a1, a2);
  const auto whole = SigmaEngine<F>(sum, p, guard).enumerate(guard);
  const auto s1 = SigmaEngine<F>(a1, std::max<std::size_t>(1, std::min(p, a1.rank())), guard)
                      .enumerate(guard);
  const auto s2 = SigmaEngine<F>(a2, std::max<std::size_t>(1, std::min(p, a2.rank())), guard)
                      .enumerate(guard);
  std::vector<Mask> prod;
  for (Mask m1 : s1)
    for (Mask m2 : s2) prod.push_back(m1 | (m2 << a1.size()));
  std::sort(prod.begin(), prod.end());
  return prod == whole;
}

}  // namespace msarr

#endif  // MSARR_SIGMA_HPP_
