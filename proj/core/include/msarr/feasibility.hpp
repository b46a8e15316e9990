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

// Exact linear feasibility: the Gordan alternative and pinned cone systems.

#ifndef MSARR_FEASIBILITY_HPP_
#define MSARR_FEASIBILITY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "msarr/matrix.hpp"

namespace msarr {

// Number of simplex solves run so far in this process.
std::uint64_t lp_solve_count();
void reset_lp_solve_count();

namespace detail {

void count_lp_solve();

template <OrderedField F>
struct Phase1Result {
  bool feasible = false;
  Vec<F> x;  // primal solution when feasible
  Vec<F> y;  // Farkas multipliers for the original rows when infeasible
};

// Finds x >= 0 with A x = b, or y with y^T A <= 0 and y^T b > 0.
// Dense phase-1 simplex with Bland's rule.
template <OrderedField F>
Phase1Result<F> phase1(const Matrix<F>& a, const Vec<F>& b) {
  count_lp_solve();
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("rhs length mismatch");
  const std::size_t w = n + m;
  Matrix<F> t(m, w);
  Vec<F> rhs(m);
  std::vector<int> s(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].sign() < 0) s[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = s[i] > 0 ? a(i, j) : -a(i, j);
    t(i, n + i) = F(1);
    rhs[i] = s[i] > 0 ? b[i] : -b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  auto cost = [n](std::size_t j) { return j >= n ? F(1) : F(0); };

  Vec<F> d(w, F(0));
  auto recompute_costs = [&] {
    for (std::size_t j = 0; j < w; ++j) {
      F v = cost(j);
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n && !t(i, j).is_zero()) v -= t(i, j);
      }
      d[j] = v;
    }
  };
  recompute_costs();

  for (;;) {
    std::size_t enter = w;
    for (std::size_t j = 0; j < w; ++j) {
      if (d[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == w) break;
    std::size_t leave = m;
    F best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      F ratio = rhs[i] / t(i, enter);
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // Phase 1 is bounded below by zero, so a pivot row always exists.
    if (leave == m) throw std::logic_error("phase-1 simplex unbounded");
    const F piv = t(leave, enter);
    for (std::size_t j = 0; j < w; ++j) {
      if (!t(leave, j).is_zero()) t(leave, j) /= piv;
    }
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const F f = t(i, enter);
      for (std::size_t j = 0; j < w; ++j) {
        if (!t(leave, j).is_zero()) t(i, j) -= f * t(leave, j);
      }
      rhs[i] -= f * rhs[leave];
    }
    if (!d[enter].is_zero()) {
      const F f = d[enter];
      for (std::size_t j = 0; j < w; ++j) {
        if (!t(leave, j).is_zero()) d[j] -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }

  F value(0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) value += rhs[i];

  Phase1Result<F> out;
  if (value.is_zero()) {
    out.feasible = true;
    out.x.assign(n, F(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = rhs[i];
    return out;
  }
  // Reduced cost of artificial i is 1 - y_i.
  out.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    F yi = F(1) - d[n + i];
    out.y[i] = s[i] > 0 ? yi : -yi;
  }
  return out;
}

}  // namespace detail

template <OrderedField F>
struct InteriorPoint {
  Vec<F> point;
};

// Row indices with strictly positive weights whose combination vanishes.
template <OrderedField F>
struct RowCertificate {
  std::vector<std::size_t> rows;
  Vec<F> lambda;
};

template <OrderedField F>
class FeasibilityOutcome {
 public:
  explicit FeasibilityOutcome(InteriorPoint<F> p) : v_(std::move(p)) {}
  explicit FeasibilityOutcome(RowCertificate<F> c) : v_(std::move(c)) {}

  bool has_point() const { return v_.index() == 0; }
  bool has_certificate() const { return v_.index() == 1; }
  const Vec<F>& point() const { return std::get<0>(v_).point; }
  const RowCertificate<F>& certificate() const { return std::get<1>(v_); }

 private:
  std::variant<InteriorPoint<F>, RowCertificate<F>> v_;
};

template <OrderedField F>
bool verify_point(const Matrix<F>& b, const Vec<F>& u) {
  if (u.size() != b.cols()) return false;
  const Vec<F> bu = b * u;
  for (const auto& v : bu)
    if (v.sign() <= 0) return false;
  return true;
}

template <OrderedField F>
bool verify_certificate(const Matrix<F>& b, const RowCertificate<F>& c) {
  if (c.rows.empty() || c.rows.size() != c.lambda.size()) return false;
  Vec<F> sum(b.cols(), F(0));
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    if (c.rows[i] >= b.rows() || c.lambda[i].sign() <= 0) return false;
    for (std::size_t j = 0; j < b.cols(); ++j) sum[j] += c.lambda[i] * b(c.rows[i], j);
  }
  return is_zero_vector(sum);
}

// Exactly one of: u with B u > 0, or lambda >= 0, lambda != 0, B^T lambda = 0.
template <OrderedField F>
FeasibilityOutcome<F> strict_feasibility(const Matrix<F>& b) {
  if (b.rows() == 0) throw std::invalid_argument("strict_feasibility: no rows");
  const std::size_t m = b.rows(), l = b.cols();
  Matrix<F> a(l + 1, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < l; ++j) a(j, i) = b(i, j);
    a(l, i) = F(1);
  }
  Vec<F> rhs(l + 1, F(0));
  rhs[l] = F(1);
  auto res = detail::phase1(a, rhs);
  if (res.feasible) {
    RowCertificate<F> c;
    for (std::size_t i = 0; i < m; ++i) {
      if (res.x[i].sign() > 0) {
        c.rows.push_back(i);
        c.lambda.push_back(res.x[i]);
      }
    }
    if (!verify_certificate(b, c)) {
      throw std::logic_error("strict_feasibility: certificate failed check");
    }
    return FeasibilityOutcome<F>(std::move(c));
  }
  Vec<F> u(l);
  for (std::size_t j = 0; j < l; ++j) u[j] = -res.y[j];
  if (!verify_point(b, u)) {
    throw std::logic_error("strict_feasibility: point failed check");
  }
  return FeasibilityOutcome<F>(InteriorPoint<F>{std::move(u)});
}

// A point x with eq x = 0, geq x >= 0 and geq[pin_row] x = pin_value, if any.
template <OrderedField F>
std::optional<Vec<F>> mixed_feasibility(const Matrix<F>& eq,
                                        const Matrix<F>& geq,
                                        std::size_t pin_row,
                                        const F& pin_value) {
  const std::size_t n = geq.cols();
  if (!eq.empty() && eq.cols() != n) {
    throw std::invalid_argument("mixed_feasibility: column mismatch");
  }
  if (pin_row >= geq.rows()) {
    throw std::invalid_argument("mixed_feasibility: pin row out of range");
  }
  if (pin_value.sign() <= 0) {
    throw std::invalid_argument("mixed_feasibility: pin value must be positive");
  }
  const std::size_t e = eq.rows(), g = geq.rows();
  const std::size_t vars = 2 * n + g;
  Matrix<F> a(e + g + 1, vars);
  Vec<F> rhs(e + g + 1, F(0));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = eq(i, j);
      a(i, n + j) = -eq(i, j);
    }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(e + i, j) = geq(i, j);
      a(e + i, n + j) = -geq(i, j);
    }
    a(e + i, 2 * n + i) = F(-1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    a(e + g, j) = geq(pin_row, j);
    a(e + g, n + j) = -geq(pin_row, j);
  }
  rhs[e + g] = pin_value;
  auto res = detail::phase1(a, rhs);
  if (!res.feasible) return std::nullopt;
  Vec<F> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = res.x[j] - res.x[n + j];
  if (e && !is_zero_vector(eq * x)) {
    throw std::logic_error("mixed_feasibility: equality check failed");
  }
  const Vec<F> gx = geq * x;
  for (const auto& v : gx)
    if (v.sign() < 0) throw std::logic_error("mixed_feasibility: cone check failed");
  if (gx[pin_row] != pin_value) {
    throw std::logic_error("mixed_feasibility: pin check failed");
  }
  return x;
}

}  // namespace msarr

#endif  // MSARR_FEASIBILITY_HPP_
