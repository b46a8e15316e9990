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

// Manin-Schechtman arrangements B(n,k,A0) built from a generic base A0.

#ifndef MSARR_MSBUILD_HPP_
#define MSARR_MSBUILD_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "msarr/arrangement.hpp"
#include "msarr/setfamily.hpp"

namespace msarr {

// Raised for a base matrix with a vanishing maximal minor.
class NonGenericBase : public std::invalid_argument {
 public:
  explicit NonGenericBase(std::vector<std::size_t> minor)
      : std::invalid_argument(describe(minor)), minor_(std::move(minor)) {}
  // 0-based column indices of the zero minor.
  const std::vector<std::size_t>& minor() const { return minor_; }

 private:
  static std::string describe(const std::vector<std::size_t>& m) {
    std::string s = "base is not generic: minor on columns {";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i] + 1);
    return s + "} vanishes";
  }
  std::vector<std::size_t> minor_;
};

template <OrderedField F>
F minor_det(const Matrix<F>& g, Mask cols) {
  return det(g.select_cols(mask_elements(cols)));
}

// First k-subset of columns (lexicographic) with zero determinant.
template <OrderedField F>
std::optional<std::vector<std::size_t>> first_zero_minor(const Matrix<F>& g) {
  if (g.cols() < g.rows()) throw std::invalid_argument("base needs n >= k");
  if (g.cols() > 32) throw std::invalid_argument("base has more than 32 columns");
  for (Mask s : k_subsets(g.cols(), g.rows()))
    if (minor_det(g, s).is_zero()) return mask_elements(s);
  return std::nullopt;
}

template <OrderedField F>
bool is_generic(const Matrix<F>& g) {
  return !first_zero_minor(g);
}

// Columns alpha_1..alpha_n of a k x n matrix with all maximal minors nonzero.
template <OrderedField F>
class GenericArrangement {
 public:
  explicit GenericArrangement(Matrix<F> m) : m_(std::move(m)) {
    if (m_.rows() == 0) throw std::invalid_argument("base needs k >= 1");
    if (auto z = first_zero_minor(m_)) throw NonGenericBase(*z);
  }
  std::size_t k() const { return m_.rows(); }
  std::size_t n() const { return m_.cols(); }
  const Matrix<F>& matrix() const { return m_; }
  Vec<F> column(std::size_t i) const { return m_.col(i); }
  // Determinant of the columns in `cols` taken in increasing order.
  F delta(Mask cols) const {
    if (static_cast<std::size_t>(popcount(cols)) != k()) {
      throw std::invalid_argument("delta needs exactly k columns");
    }
    return minor_det(m_, cols);
  }

 private:
  Matrix<F> m_;
};

// (alpha_I)_{i_p} = (-1)^{p-1} det(alpha_{i_1}, .., alpha_{i_p} omitted, ..).
template <OrderedField F>
Vec<F> alpha_I(const GenericArrangement<F>& g, Mask I) {
  if (static_cast<std::size_t>(popcount(I)) != g.k() + 1) {
    throw std::invalid_argument("alpha_I needs a (k+1)-subset");
  }
  if (I & ~full_mask(g.n())) throw std::invalid_argument("alpha_I subset leaves [n]");
  Vec<F> v(g.n(), F(0));
  const auto idx = mask_elements(I);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    F d = g.delta(I & ~bit(idx[p]));
    v[idx[p]] = (p % 2 == 0) ? d : -d;
  }
  return v;
}

template <OrderedField F>
Vec<F> alpha_I(const GenericArrangement<F>& g, const std::vector<std::size_t>& I) {
  return alpha_I(g, mask_of(I));
}

template <OrderedField F>
struct MSArrangement {
  GenericArrangement<F> base;
  CentralArrangement<F> arrangement;
  std::vector<Mask> subsets;  // hyperplane i is D_{subsets[i]}

  std::size_t n() const { return base.n(); }
  std::size_t k() const { return base.k(); }
  std::size_t index_of(Mask I) const {
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (subsets[i] == I) return i;
    throw std::invalid_argument("no hyperplane D_I for I = " + subset_label(I, n()));
  }
  Mask subsets_mask(const std::vector<Mask>& Is) const {
    Mask m = 0;
    for (Mask I : Is) m |= bit(index_of(I));
    return m;
  }
};

template <OrderedField F>
MSArrangement<F> build_ms(const GenericArrangement<F>& g) {
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  std::vector<Mask> subsets = k_subsets(g.n(), g.k() + 1);
  if (subsets.size() > kMaxHyperplanes) {
    throw std::invalid_argument("B(n,k) has more than 64 hyperplanes");
  }
  for (Mask I : subsets) {
    labels.push_back(subset_label(I, g.n()));
    normals.push_back(alpha_I(g, I));
  }
  CentralArrangement<F> a(g.n(), std::move(labels), std::move(normals));
  return MSArrangement<F>{g, std::move(a), std::move(subsets)};
}

template <OrderedField F>
MSArrangement<F> build_ms(const Matrix<F>& m) {
  return build_ms(GenericArrangement<F>(m));
}

template <OrderedField F>
GenericArrangement<F> moment_curve_base(const std::vector<F>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1] < s[i])) {
      throw std::invalid_argument("moment-curve parameters must be strictly increasing");
    }
  }
  Matrix<F> m(2, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    m(0, i) = F(1);
    m(1, i) = s[i];
  }
  return GenericArrangement<F>(std::move(m));
}

// Normals alpha_{I(T,j)}, I(T,j) = {i_1..i_k, i_{k+j}}, j = 1..|T|-k.
template <OrderedField F>
std::vector<Vec<F>> d_flat_rows(const GenericArrangement<F>& g, Mask T) {
  const auto idx = mask_elements(T);
  if (idx.size() < g.k() + 1) throw std::invalid_argument("D_T needs |T| >= k+1");
  Mask head = 0;
  for (std::size_t i = 0; i < g.k(); ++i) head |= bit(idx[i]);
  std::vector<Vec<F>> rows;
  for (std::size_t j = g.k(); j < idx.size(); ++j) rows.push_back(alpha_I(g, head | bit(idx[j])));
  return rows;
}

template <OrderedField F>
Flat<F> d_flat(const MSArrangement<F>& m, Mask T) {
  Flat<F> f;
  f.normal_space = rref_of_rows(d_flat_rows(m.base, T), m.n());
  f.mask = detail::closure_mask(f.normal_space, m.arrangement.normals());
  f.closed_set = mask_elements(f.mask);
  f.codim = f.normal_space.rank();
  return f;
}

// (n-k) x n matrix whose row space is orthogonal to the base's.
template <OrderedField F>
Matrix<F> gale_dual(const GenericArrangement<F>& g) {
  return Matrix<F>::from_rows(kernel_basis(g.matrix()), g.n());
}

// Hyperplane for I spanned by the Gale vectors beta_j, j not in I.
template <OrderedField F>
CentralArrangement<F> gale_arrangement(const GenericArrangement<F>& g) {
  const Matrix<F> beta = gale_dual(g);
  const std::size_t d = beta.rows();
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  for (Mask I : k_subsets(g.n(), g.k() + 1)) {
    Matrix<F> rows(0, d);
    for (std::size_t j = 0; j < g.n(); ++j)
      if (!(I >> j & 1)) rows.append_row(beta.col(j));
    const auto ker = kernel_basis(rows);
    if (ker.size() != 1) throw std::logic_error("Gale vectors are not in general position");
    labels.push_back(subset_label(I, g.n()));
    normals.push_back(ker[0]);
  }
  return CentralArrangement<F>(d, std::move(labels), std::move(normals));
}

// Maximal T with X inside D_T, i.e. every (k+1)-subset of T labels a
// hyperplane through X.
template <OrderedField F>
SetFamily canonical_presentation(const MSArrangement<F>& m, const Flat<F>& x) {
  const std::size_t n = m.n(), k = m.k();
  if (n > 20) throw std::invalid_argument("canonical presentation needs n <= 20");
  std::unordered_set<Mask> through;
  for (auto h : x.closed_set) through.insert(m.subsets.at(h));
  auto qualifies = [&](Mask T) {
    if (static_cast<std::size_t>(popcount(T)) < k + 1) return false;
    const auto el = mask_elements(T);
    for (Mask I : k_subsets(el.size(), k + 1)) {
      // Map the pattern I over the elements of T.
      Mask J = 0;
      for (auto e : mask_elements(I)) J |= bit(el[e]);
      if (!through.count(J)) return false;
    }
    return true;
  };
  std::vector<Mask> out;
  for (Mask T = 1; T < (Mask{1} << n); ++T) {
    if (!qualifies(T)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(T >> i & 1) && qualifies(T | bit(i))) maximal = false;
    if (maximal) out.push_back(T);
  }
  return SetFamily(n, k, std::move(out));
}

template <OrderedField F>
struct VeryGenericReport {
  bool very_generic = true;
  // The first failing flat in lattice order and its canonical presentation.
  std::optional<Flat<F>> failing_flat;
  std::optional<SetFamily> presentation;
  // Canonical presentations of every failing flat, in lattice order.
  std::vector<SetFamily> all_presentations;
};

// codim X = sum over the canonical presentation of (|T| - k), flat by flat.
// With stop_at_first the scan ends at the first failure.
template <OrderedField F>
VeryGenericReport<F> is_very_generic(const MSArrangement<F>& m, bool stop_at_first = true) {
  VeryGenericReport<F> rep;
  for (const auto* x : m.arrangement.lattice().all()) {
    if (x->codim == 0) continue;
    SetFamily t = canonical_presentation(m, *x);
    std::size_t sum = 0;
    for (Mask T : t.members()) sum += popcount(T) - m.k();
    if (sum != x->codim) {
      if (rep.very_generic) {
        rep.very_generic = false;
        rep.failing_flat = *x;
        rep.presentation = t;
      }
      rep.all_presentations.push_back(std::move(t));
      if (stop_at_first) return rep;
    }
  }
  return rep;
}

// Integer matrix with entries uniform in [-bound, bound].
inline Matrix<Rational> random_integer_matrix(std::size_t rows, std::size_t cols,
                                              std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(dist(rng));
  return m;
}

struct SamplingOptions {
  long bound = 100;
  std::size_t retries = 50;
};

// Seeded rejection sampling of a very generic base.
inline MSArrangement<Rational> random_very_generic(std::size_t n, std::size_t k,
                                                   std::uint64_t seed,
                                                   const SamplingOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < opt.retries; ++attempt) {
    Matrix<Rational> m = random_integer_matrix(k, n, rng, opt.bound);
    if (!is_generic(m)) continue;
    auto ms = build_ms(m);
    if (is_very_generic(ms).very_generic) return ms;
  }
  throw RetryExhausted("no very generic base for (n,k) = (" + std::to_string(n) + "," +
                       std::to_string(k) + ") after " + std::to_string(opt.retries) +
                       " attempts; try another seed");
}

// Named bases: "ms-3.1", "falk", "b63", "moment:s1,..,sn". Unknown names
// throw std::invalid_argument.
GenericArrangement<Rational> rational_example_base(const std::string& name);
// The base over Q(rt5) with phi = (1 + rt5)/2.
GenericArrangement<QSqrt5> h3_base();

}  // namespace msarr

#endif  // MSARR_MSBUILD_HPP_
