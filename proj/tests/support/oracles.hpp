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

// Oracles used by the tests. They share no code with the library beyond
// the scalar and matrix types: feasibility by Fourier-Motzkin elimination,
// lattices by closing every subset of hyperplanes, chambers and Sigma_p
// by brute force over sign vectors.

#ifndef MSARR_TESTS_ORACLES_HPP_
#define MSARR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "msarr/arrangement.hpp"
#include "msarr/matrix.hpp"

namespace msarr::testing {

// Rank by plain Gaussian elimination over the field.
template <OrderedField F>
std::size_t gauss_rank(std::vector<Vec<F>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const F f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Is there u with rows . u > 0 for every row? Strict homogeneous systems
// are closed under positive combination, so elimination is exact.
template <OrderedField F>
bool fm_strictly_feasible(std::vector<Vec<F>> rows) {
  if (rows.empty()) return true;
  std::size_t cols = rows[0].size();
  while (true) {
    for (const auto& r : rows)
      if (is_zero_vector(r)) return false;
    if (cols == 0 || rows.empty()) return true;
    const std::size_t c = cols - 1;
    std::vector<Vec<F>> pos, neg, next;
    for (auto& r : rows) {
      const int s = r[c].sign();
      Vec<F> t(r.begin(), r.begin() + static_cast<long>(c));
      if (s == 0) {
        next.push_back(std::move(t));
      } else {
        // Normalize so the eliminated coefficient is +1 or -1.
        const F a = s > 0 ? r[c] : -r[c];
        for (auto& x : t) x /= a;
        (s > 0 ? pos : neg).push_back(std::move(t));
      }
    }
    if (pos.empty() || neg.empty()) {
      // The last variable can be pushed to make the signed rows positive.
      rows = std::move(next);
      --cols;
      if (rows.empty()) return true;
      continue;
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Vec<F> s(c);
        for (std::size_t j = 0; j < c; ++j) s[j] = p[j] + q[j];
        next.push_back(std::move(s));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
    --cols;
  }
}

template <OrderedField F>
std::vector<Vec<F>> signed_normals(const CentralArrangement<F>& a, Mask eps, Mask members) {
  std::vector<Vec<F>> rows;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (!(members >> h & 1)) continue;
    rows.push_back((eps >> h & 1) ? scaled(a.normal(h), F(-1)) : a.normal(h));
  }
  return rows;
}

template <OrderedField F>
std::size_t rank_of(const CentralArrangement<F>& a, Mask members) {
  std::vector<Vec<F>> rows;
  for (auto h : mask_elements(members)) rows.push_back(a.normal(h));
  return gauss_rank(rows);
}

// Closed sets keyed by mask with their codim, from every subset.
template <OrderedField F>
std::map<Mask, std::size_t> subset_closure_lattice(const CentralArrangement<F>& a) {
  std::map<Mask, std::size_t> out;
  const std::size_t n = a.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const std::size_t r = rank_of(a, s);
    Mask closed = s;
    for (std::size_t h = 0; h < n; ++h)
      if (!(s >> h & 1) && rank_of(a, s | bit(h)) == r) closed |= bit(h);
    out.emplace(closed, r);
  }
  return out;
}

template <OrderedField F>
std::vector<Mask> brute_chambers(const CentralArrangement<F>& a) {
  std::vector<Mask> out;
  for (Mask e = 0; e < (Mask{1} << a.size()); ++e)
    if (fm_strictly_feasible(signed_normals(a, e, a.all_mask()))) out.push_back(e);
  return out;
}

// Sigma_p by testing every flat of codim <= p.
template <OrderedField F>
std::vector<Mask> brute_sigma(const CentralArrangement<F>& a, std::size_t p) {
  std::vector<Mask> flats;
  for (const auto& [m, c] : subset_closure_lattice(a))
    if (c >= 1 && c <= p) flats.push_back(m);
  std::vector<Mask> out;
  for (Mask e = 0; e < (Mask{1} << a.size()); ++e) {
    bool ok = true;
    for (Mask x : flats) {
      if (!fm_strictly_feasible(signed_normals(a, e, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace msarr::testing

#endif  // MSARR_TESTS_ORACLES_HPP_
