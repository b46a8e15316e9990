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

// Central hyperplane arrangements over an exact ordered field.

#ifndef MSARR_ARRANGEMENT_HPP_
#define MSARR_ARRANGEMENT_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "msarr/errors.hpp"
#include "msarr/feasibility.hpp"
#include "msarr/matrix.hpp"
#include "msarr/matroid.hpp"

namespace msarr {

inline constexpr std::size_t kMaxHyperplanes = 64;
inline constexpr std::size_t kChamberGuard = 22;

// Total sign assignment; entry i is the side of hyperplane i (+1 or -1).
// As a mask, bit i is set when hyperplane i carries the minus sign.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> signs) : s_(std::move(signs)) {
    for (auto v : s_) {
      if (v != 1 && v != -1) throw std::invalid_argument("sign must be +1 or -1");
    }
  }
  static SignVector all_plus(std::size_t n) {
    return SignVector(std::vector<std::int8_t>(n, 1));
  }
  static SignVector from_mask(Mask m, std::size_t n) {
    std::vector<std::int8_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i & 1) ? -1 : 1;
    return SignVector(std::move(s));
  }
  // "++-+" style text.
  static SignVector parse(std::string_view text) {
    std::vector<std::int8_t> s;
    for (char c : text) {
      if (c == '+') s.push_back(1);
      else if (c == '-') s.push_back(-1);
      else throw std::invalid_argument("sign vector characters must be + or -");
    }
    return SignVector(std::move(s));
  }

  std::size_t size() const { return s_.size(); }
  int operator[](std::size_t i) const { return s_[i]; }
  Mask mask() const {
    Mask m = 0;
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (s_[i] < 0) m |= bit(i);
    return m;
  }
  SignVector flipped(Mask m) const {
    SignVector r = *this;
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (m >> i & 1) r.s_[i] = static_cast<std::int8_t>(-r.s_[i]);
    return r;
  }
  std::string str() const {
    std::string out;
    for (auto v : s_) out += v > 0 ? '+' : '-';
    return out;
  }
  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> s_;
};

// Positive combination sum lambda_H eps_H alpha_H = 0 over `support`.
template <OrderedField F>
struct GordanCertificate {
  std::vector<std::size_t> support;
  Vec<F> lambda;
};

// A lattice element: the hyperplanes containing X, codim X and an echelon
// basis of X^perp.
template <OrderedField F>
struct Flat {
  std::vector<std::size_t> closed_set;
  Mask mask = 0;
  std::size_t codim = 0;
  RowEchelon<F> normal_space;
};

template <OrderedField F>
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<std::vector<Flat<F>>> levels)
      : levels_(std::move(levels)) {
    for (std::size_t c = 0; c < levels_.size(); ++c)
      for (std::size_t i = 0; i < levels_[c].size(); ++i)
        index_.emplace(levels_[c][i].mask, std::make_pair(c, i));
  }

  std::size_t max_codim() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  const std::vector<Flat<F>>& level(std::size_t codim) const {
    static const std::vector<Flat<F>> kEmpty;
    return codim < levels_.size() ? levels_[codim] : kEmpty;
  }
  const std::vector<std::vector<Flat<F>>>& levels() const { return levels_; }
  std::size_t size() const { return index_.size(); }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c;
    for (const auto& l : levels_) c.push_back(l.size());
    return c;
  }
  const Flat<F>* find(Mask closed) const {
    auto it = index_.find(closed);
    return it == index_.end() ? nullptr
                              : &levels_[it->second.first][it->second.second];
  }
  const Flat<F>& bottom() const { return levels_.at(0).at(0); }
  std::vector<const Flat<F>*> all() const {
    std::vector<const Flat<F>*> out;
    for (const auto& l : levels_)
      for (const auto& f : l) out.push_back(&f);
    return out;
  }

 private:
  std::vector<std::vector<Flat<F>>> levels_;
  std::unordered_map<Mask, std::pair<std::size_t, std::size_t>> index_;
};

namespace detail {

template <OrderedField F>
Mask closure_mask(const RowEchelon<F>& e, const std::vector<Vec<F>>& normals) {
  Mask m = 0;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (e.contains(normals[i])) m |= bit(i);
  return m;
}

// Breadth-first construction by codimension: each flat is extended by one
// vector at a time, closed, and deduplicated by its closed set (two flats
// with equal closed sets have equal normal spaces). Parallel and zero
// vectors are allowed.
template <OrderedField F>
std::vector<std::vector<Flat<F>>> build_levels(std::size_t dim,
                                               const std::vector<Vec<F>>& normals,
                                               std::size_t max_codim) {
  if (normals.size() > kMaxHyperplanes) {
    throw std::invalid_argument("at most 64 vectors are supported");
  }
  std::vector<std::vector<Flat<F>>> levels(1);
  Flat<F> bottom;
  bottom.normal_space.basis = Matrix<F>(0, dim);
  bottom.mask = closure_mask(bottom.normal_space, normals);
  bottom.closed_set = mask_elements(bottom.mask);
  levels[0].push_back(std::move(bottom));
  for (std::size_t c = 0; c < max_codim; ++c) {
    std::vector<Flat<F>> next;
    std::unordered_map<Mask, std::size_t> seen;
    for (const auto& f : levels[c]) {
      Mask covered = f.mask;
      for (std::size_t i = 0; i < normals.size(); ++i) {
        if (covered >> i & 1) continue;
        RowEchelon<F> e = extend_echelon(f.normal_space, normals[i]);
        const Mask m = closure_mask(e, normals);
        covered |= m;
        if (seen.count(m)) continue;
        seen.emplace(m, next.size());
        Flat<F> g;
        g.mask = m;
        g.closed_set = mask_elements(m);
        g.codim = c + 1;
        g.normal_space = std::move(e);
        next.push_back(std::move(g));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const Flat<F>& a, const Flat<F>& b) {
      return a.closed_set < b.closed_set;
    });
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace detail

template <OrderedField F>
struct ChamberTable {
  std::vector<Mask> masks;      // sorted
  std::vector<Vec<F>> points;   // an interior point per chamber

  bool contains(Mask m) const {
    return std::binary_search(masks.begin(), masks.end(), m);
  }
  std::size_t size() const { return masks.size(); }
};

template <OrderedField F>
class CentralArrangement {
 public:
  using Field = F;

  CentralArrangement() : CentralArrangement(0, {}, {}) {}
  CentralArrangement(std::size_t dim, std::vector<std::string> labels,
                     std::vector<Vec<F>> normals)
      : dim_(dim),
        labels_(std::move(labels)),
        normals_(std::move(normals)),
        cache_(std::make_shared<Cache>()) {
    if (labels_.size() != normals_.size()) {
      throw std::invalid_argument("label count differs from normal count");
    }
    if (normals_.size() > kMaxHyperplanes) {
      throw std::invalid_argument("at most 64 hyperplanes are supported");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      if (!seen.insert(labels_[i]).second) {
        throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
      }
      if (normals_[i].size() != dim_) {
        throw std::invalid_argument("normal of '" + labels_[i] +
                                    "' has wrong length");
      }
      if (is_zero_vector(normals_[i])) {
        throw std::invalid_argument("normal of '" + labels_[i] + "' is zero");
      }
    }
    for (std::size_t i = 0; i < normals_.size(); ++i)
      for (std::size_t j = i + 1; j < normals_.size(); ++j) {
        if (msarr::rank(Matrix<F>::from_rows({normals_[i], normals_[j]}, dim_)) < 2) {
          throw std::invalid_argument("hyperplanes '" + labels_[i] + "' and '" +
                                      labels_[j] + "' coincide");
        }
      }
    row_space_ = rref(normal_matrix());
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  std::size_t rank() const { return row_space_.rank(); }
  bool is_essential() const { return rank() == dim_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<F>& normal(std::size_t i) const { return normals_.at(i); }
  const std::vector<Vec<F>>& normals() const { return normals_; }
  const RowEchelon<F>& row_space() const { return row_space_; }
  Matrix<F> normal_matrix() const {
    Matrix<F> m(0, dim_);
    for (const auto& v : normals_) m.append_row(v);
    return m;
  }
  std::size_t index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw std::invalid_argument("unknown hyperplane label '" +
                                std::string(label) + "'");
  }
  Mask all_mask() const { return full_mask(size()); }

  // Full intersection lattice, computed once and shared by copies.
  const Lattice<F>& lattice() const {
    std::call_once(cache_->lattice_once, [this] {
      cache_->lattice = std::make_unique<Lattice<F>>(
          detail::build_levels(dim_, normals_, rank()));
    });
    return *cache_->lattice;
  }

  // Chambers as sign masks, computed once; throws GuardExceeded above the
  // hyperplane ceiling.
  const ChamberTable<F>& chambers(std::size_t guard = kChamberGuard) const {
    if (size() > guard) {
      throw GuardExceeded("chamber enumeration: " + std::to_string(size()) +
                          " hyperplanes exceed the limit of " +
                          std::to_string(guard));
    }
    std::call_once(cache_->chambers_once, [this] {
      cache_->chambers = std::make_unique<ChamberTable<F>>(enumerate_chambers());
    });
    return *cache_->chambers;
  }

  // Rows eps_H alpha_H for the hyperplanes in `members`.
  Matrix<F> signed_rows(const SignVector& eps,
                        const std::vector<std::size_t>& members) const {
    check_sign_vector(eps);
    Matrix<F> m(0, dim_);
    for (auto i : members) m.append_row(eps[i] > 0 ? normals_[i] : scaled(normals_[i], F(-1)));
    return m;
  }

  SignVector sign_of_point(const Vec<F>& x) const {
    std::vector<std::int8_t> s(size());
    for (std::size_t i = 0; i < size(); ++i) {
      const int v = dot(normals_[i], x).sign();
      if (v == 0) {
        throw std::invalid_argument("point lies on hyperplane '" + labels_[i] + "'");
      }
      s[i] = static_cast<std::int8_t>(v);
    }
    return SignVector(std::move(s));
  }

  void check_sign_vector(const SignVector& eps) const {
    if (eps.size() != size()) {
      throw std::invalid_argument("sign vector length " + std::to_string(eps.size()) +
                                  " differs from hyperplane count " +
                                  std::to_string(size()));
    }
  }

  // Flat generated by the given hyperplanes (closure of their span).
  Flat<F> flat_of(Mask members) const {
    Matrix<F> m(0, dim_);
    for (auto i : mask_elements(members)) m.append_row(normals_.at(i));
    Flat<F> f;
    f.normal_space = rref(m);
    f.mask = detail::closure_mask(f.normal_space, normals_);
    f.closed_set = mask_elements(f.mask);
    f.codim = f.normal_space.rank();
    return f;
  }

 private:
  struct Cache {
    std::once_flag lattice_once;
    std::unique_ptr<Lattice<F>> lattice;
    std::once_flag chambers_once;
    std::unique_ptr<ChamberTable<F>> chambers;
  };

  // Adds one hyperplane at a time; a chamber splits when the far side of
  // the new hyperplane stays strictly feasible.
  ChamberTable<F> enumerate_chambers() const {
    const std::size_t r = rank();
    std::vector<Vec<F>> coords(size());
    for (std::size_t i = 0; i < size(); ++i) coords[i] = row_space_.coordinates(normals_[i]);
    struct Cell {
      Mask mask;
      Vec<F> pt;
    };
    std::vector<Cell> cells{{0, Vec<F>(r, F(0))}};
    for (std::size_t h = 0; h < size(); ++h) {
      std::vector<Cell> next;
      for (auto& cell : cells) {
        const int s = dot(coords[h], cell.pt).sign();
        for (int side : {1, -1}) {
          const Mask m = side < 0 ? (cell.mask | bit(h)) : cell.mask;
          if (s == side) {
            next.push_back({m, cell.pt});
            continue;
          }
          Matrix<F> rows(h + 1, r);
          for (std::size_t j = 0; j <= h; ++j) {
            const bool minus = (m >> j) & 1;
            for (std::size_t c = 0; c < r; ++c)
              rows(j, c) = minus ? -coords[j][c] : coords[j][c];
          }
          auto out = strict_feasibility(rows);
          if (out.has_point()) next.push_back({m, out.point()});
        }
      }
      cells = std::move(next);
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.mask < b.mask; });
    ChamberTable<F> t;
    for (auto& c : cells) {
      t.masks.push_back(c.mask);
      t.points.push_back(row_space_.lift(c.pt));
    }
    return t;
  }

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec<F>> normals_;
  RowEchelon<F> row_space_;
  std::shared_ptr<Cache> cache_;
};

template <OrderedField F>
std::vector<std::string> labels_of(const CentralArrangement<F>& a,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(a.label(i));
  return out;
}

// Flats with codim <= max_codim (default: the rank).
template <OrderedField F>
Lattice<F> intersection_lattice(const CentralArrangement<F>& a,
                                std::optional<std::size_t> max_codim = std::nullopt) {
  if (!max_codim || *max_codim >= a.rank()) return a.lattice();
  return Lattice<F>(detail::build_levels(a.dim(), a.normals(), *max_codim));
}

template <OrderedField F>
const Flat<F>& require_flat(const CentralArrangement<F>& a, const Flat<F>& x) {
  const Flat<F>* f = a.lattice().find(x.mask);
  if (!f || f->codim != x.codim) {
    throw std::invalid_argument("flat is not in the intersection lattice");
  }
  return *f;
}

template <OrderedField F>
CentralArrangement<F> subarrangement(const CentralArrangement<F>& a, Mask members) {
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  for (auto i : mask_elements(members)) {
    labels.push_back(a.label(i));
    normals.push_back(a.normal(i));
  }
  return CentralArrangement<F>(a.dim(), std::move(labels), std::move(normals));
}

template <OrderedField F>
CentralArrangement<F> localization(const CentralArrangement<F>& a, const Flat<F>& x) {
  require_flat(a, x);
  return subarrangement(a, x.mask);
}

// The same hyperplanes in coordinates of the row space of the normals.
// Hyperplane order and labels are unchanged, so sign vectors and closed
// sets carry over as they are.
template <OrderedField F>
struct Essentialization {
  CentralArrangement<F> arrangement;
  RowEchelon<F> row_space;

  // A point of the original space evaluating like y does downstairs.
  Vec<F> lift(const Vec<F>& y) const { return row_space.lift(y); }
  Vec<F> project(const Vec<F>& alpha) const { return row_space.coordinates(alpha); }
};

template <OrderedField F>
Essentialization<F> essentialize(const CentralArrangement<F>& a) {
  const RowEchelon<F>& e = a.row_space();
  std::vector<Vec<F>> normals;
  for (const auto& v : a.normals()) normals.push_back(e.coordinates(v));
  return {CentralArrangement<F>(e.rank(), a.labels(), std::move(normals)), e};
}

template <OrderedField F>
std::vector<SignVector> chamber_sign_vectors(const CentralArrangement<F>& a,
                                             std::size_t guard = kChamberGuard) {
  std::vector<SignVector> out;
  for (Mask m : a.chambers(guard).masks) out.push_back(SignVector::from_mask(m, a.size()));
  return out;
}

// Sum over the lattice of |mu(0, X)|.
template <OrderedField F>
std::uint64_t zaslavsky_chambers(const CentralArrangement<F>& a) {
  const auto flats = a.lattice().all();
  std::vector<std::int64_t> mu(flats.size(), 0);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (i == 0) {
      mu[0] = 1;
    } else {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (flats[j]->codim < flats[i]->codim &&
            (flats[j]->mask & flats[i]->mask) == flats[j]->mask) {
          s += mu[j];
        }
      }
      mu[i] = -s;
    }
    total += static_cast<std::uint64_t>(mu[i] < 0 ? -mu[i] : mu[i]);
  }
  return total;
}

template <OrderedField F>
struct Circuit {
  std::vector<std::size_t> support;
  Vec<F> coefficients;  // first coefficient normalized to 1
};

// Minimal dependent sets of size <= max_size, in lexicographic order of
// support within each size.
template <OrderedField F>
std::vector<Circuit<F>> circuits(const CentralArrangement<F>& a, std::size_t max_size) {
  if (max_size > a.size()) throw std::invalid_argument("max_size exceeds hyperplane count");
  std::vector<Circuit<F>> out;
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (Mask sub : k_subsets(a.size(), s)) {
      const auto idx = mask_elements(sub);
      Matrix<F> m(a.dim(), s);
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t r = 0; r < a.dim(); ++r) m(r, j) = a.normal(idx[j])[r];
      if (rank(m) != s - 1) continue;
      auto ker = kernel_basis(m);
      Vec<F> c = ker.at(0);
      if (std::any_of(c.begin(), c.end(), [](const F& x) { return x.is_zero(); })) continue;
      const F inv = F(1) / c[0];
      for (auto& x : c) x *= inv;
      out.push_back({idx, std::move(c)});
    }
  }
  return out;
}

// Block-diagonal sum; labels of b are primed when they collide with a's.
template <OrderedField F>
CentralArrangement<F> direct_sum(const CentralArrangement<F>& a, const CentralArrangement<F>& b) {
  std::vector<std::string> labels = a.labels();
  std::vector<Vec<F>> normals;
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec<F> v(a.dim() + b.dim(), F(0));
    std::copy(a.normal(i).begin(), a.normal(i).end(), v.begin());
    normals.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vec<F> v(a.dim() + b.dim(), F(0));
    std::copy(b.normal(i).begin(), b.normal(i).end(), v.begin() + a.dim());
    normals.push_back(std::move(v));
    std::string l = b.label(i);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(std::move(l));
  }
  return CentralArrangement<F>(a.dim() + b.dim(), std::move(labels), std::move(normals));
}

// Normals of H cap H_j (j != h) in coordinates of a basis of H_h. The
// result may contain parallel vectors, so it is returned as a plain list.
template <OrderedField F>
std::vector<Vec<F>> restriction(const CentralArrangement<F>& a, std::size_t h) {
  Matrix<F> m(0, a.dim());
  m.append_row(a.normal(h));
  const auto basis = kernel_basis(m);
  std::vector<Vec<F>> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == h) continue;
    Vec<F> v(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) v[c] = dot(a.normal(j), basis[c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Linear matroid of a vector list, flats given by closed sets of the
// subspace lattice.
template <OrderedField F>
Matroid matroid_of_vectors(std::size_t dim, const std::vector<Vec<F>>& vectors) {
  std::size_t r = rank(Matrix<F>::from_rows(vectors, dim));
  std::vector<Mask> flats;
  for (const auto& level : detail::build_levels(dim, vectors, r))
    for (const auto& f : level) flats.push_back(f.mask);
  return Matroid::from_flats(vectors.size(), std::move(flats));
}

template <OrderedField F>
Matroid matroid_of_arrangement(const CentralArrangement<F>& a) {
  std::vector<Mask> flats;
  for (const auto* f : a.lattice().all()) flats.push_back(f->mask);
  return Matroid::from_flats(a.size(), std::move(flats));
}

template <OrderedField F>
CentralArrangement<F> boolean_arrangement(std::size_t rank) {
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec<F> v(rank, F(0));
    v[i] = F(1);
    labels.push_back("x" + std::to_string(i + 1));
    normals.push_back(std::move(v));
  }
  return CentralArrangement<F>(rank, std::move(labels), std::move(normals));
}

// Br(n) in Q^n: hyperplanes x_i - x_j for i < j.
template <OrderedField F>
CentralArrangement<F> braid_arrangement(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> v(n, F(0));
      v[i] = F(1);
      v[j] = F(-1);
      labels.push_back("x" + std::to_string(i + 1) + "-x" + std::to_string(j + 1));
      normals.push_back(std::move(v));
    }
  return CentralArrangement<F>(n, std::move(labels), std::move(normals));
}

}  // namespace msarr

#endif  // MSARR_ARRANGEMENT_HPP_
