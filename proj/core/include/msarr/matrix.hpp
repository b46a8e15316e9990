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

// Dense exact matrices and fraction-free elimination.

#ifndef MSARR_MATRIX_HPP_
#define MSARR_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msarr/scalar.hpp"

namespace msarr {

template <OrderedField F>
using Vec = std::vector<F>;

template <OrderedField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<F> col(std::size_t j) const {
    Vec<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void append_row(const Vec<F>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void set_cols(std::size_t cols) {
    if (rows_ != 0 && cols != cols_) {
      throw std::invalid_argument("cannot reshape a non-empty matrix");
    }
    cols_ = cols;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }
  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  Vec<F> operator*(const Vec<F>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    Vec<F> y(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero() && !x[j].is_zero()) {
          y[i] += (*this)(i, j) * x[j];
        }
      }
    return y;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          m(i, j) += (*this)(i, k) * o(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <OrderedField F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

template <OrderedField F>
bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <OrderedField F>
Vec<F> scaled(const Vec<F>& v, const F& c) {
  Vec<F> r(v);
  for (auto& x : r) x *= c;
  return r;
}

// Bareiss elimination; every division is exact in the underlying domain.
template <OrderedField F>
F det(const Matrix<F>& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  Matrix<F> a = m;
  F prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return F(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = F(0);
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

template <OrderedField F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  F prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = F(0);
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

// Reduced row-echelon basis of a row space; pivots are 1 and their columns
// are otherwise zero. The form is unique for a given subspace.
template <OrderedField F>
struct RowEchelon {
  Matrix<F> basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
  std::size_t dim() const { return basis.cols(); }

  // Reduction of v modulo the row space; zero iff v lies in it.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const F c = v[pivots[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!basis(i, j).is_zero()) v[j] -= c * basis(i, j);
      }
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return is_zero_vector(reduce(v)); }

  // Coordinates of a row-space vector in the echelon basis.
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
    return c;
  }
  // A vector x with basis * x = y (pivot coordinates set, others zero).
  Vec<F> lift(const Vec<F>& y) const {
    Vec<F> x(dim(), F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = y[i];
    return x;
  }

  friend bool operator==(const RowEchelon&, const RowEchelon&) = default;
};

template <OrderedField F>
RowEchelon<F> rref(const Matrix<F>& m) {
  Matrix<F> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    const F inv = F(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon<F> out;
  out.basis = Matrix<F>(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.basis(i, j) = a(i, j);
  out.pivots = std::move(pivots);
  return out;
}

template <OrderedField F>
RowEchelon<F> rref_of_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
  return rref(Matrix<F>::from_rows(rows, cols));
}

// Adds one vector to an echelon basis, keeping it reduced.
template <OrderedField F>
RowEchelon<F> extend_echelon(const RowEchelon<F>& e, const Vec<F>& v) {
  Vec<F> red = e.reduce(v);
  if (is_zero_vector(red)) return e;
  Matrix<F> m = e.basis;
  m.set_cols(v.size());
  m.append_row(red);
  return rref(m);
}

template <OrderedField F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const RowEchelon<F> e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.basis(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <OrderedField F>
bool in_row_space(const Matrix<F>& m, const Vec<F>& v) {
  return rref(m).contains(v);
}

template <OrderedField F>
std::string to_string(const Vec<F>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace msarr

#endif  // MSARR_MATRIX_HPP_
