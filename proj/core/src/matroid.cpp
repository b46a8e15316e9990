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

#include "msarr/matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace msarr {

namespace {

std::string describe(Mask s) {
  std::string out = "{";
  bool first = true;
  for (auto e : mask_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

void sort_flats(std::vector<Mask>& flats) {
  std::sort(flats.begin(), flats.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
}

void lex_subsets(std::size_t m, std::size_t size, std::size_t start, Mask cur,
                 std::vector<Mask>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + size <= m; ++i) {
    lex_subsets(m, size - 1, i + 1, cur | bit(i), out);
  }
}

}  // namespace

std::vector<std::size_t> mask_elements(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(m)));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<std::size_t>& elements) {
  Mask m = 0;
  for (auto e : elements) {
    if (e >= 64) throw std::invalid_argument("element index exceeds 63");
    m |= bit(e);
  }
  return m;
}

std::vector<Mask> k_subsets(std::size_t m, std::size_t size) {
  std::vector<Mask> out;
  if (size <= m) lex_subsets(m, size, 0, 0, out);
  return out;
}

std::string subset_label(Mask s, std::size_t m) {
  std::string out;
  for (auto e : mask_elements(s)) {
    if (m > 9 && !out.empty()) out += "-";
    out += std::to_string(e + 1);
  }
  return out;
}

Matroid Matroid::from_flats(std::size_t ground, std::vector<Mask> flats) {
  if (ground > 64) throw std::invalid_argument("matroid ground set exceeds 64");
  Matroid m;
  m.ground_ = ground;
  sort_flats(flats);
  m.flats_ = std::move(flats);
  m.validate();
  m.rank_ = m.compute_rank();
  return m;
}

Matroid Matroid::from_coatoms(std::size_t ground,
                              const std::vector<Mask>& coatoms) {
  const Mask all = full_mask(ground);
  for (std::size_t i = 0; i < coatoms.size(); ++i) {
    if (coatoms[i] & ~all) {
      throw std::invalid_argument("coatom " + describe(coatoms[i]) +
                                  " leaves the ground set");
    }
    if (coatoms[i] == all) {
      throw std::invalid_argument("the ground set cannot be a coatom");
    }
    for (std::size_t j = 0; j < coatoms.size(); ++j) {
      if (i != j && (coatoms[i] & coatoms[j]) == coatoms[i]) {
        throw std::invalid_argument("coatoms are not an antichain: " +
                                    describe(coatoms[i]) + " within " +
                                    describe(coatoms[j]));
      }
    }
  }
  std::unordered_set<Mask> seen(coatoms.begin(), coatoms.end());
  std::vector<Mask> flats(coatoms.begin(), coatoms.end());
  // Flats of lower rank are intersections of coatoms.
  std::vector<Mask> frontier = flats;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask f : frontier) {
      for (Mask c : coatoms) {
        const Mask g = f & c;
        if (seen.insert(g).second) {
          flats.push_back(g);
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  flats.push_back(all);
  return from_flats(ground, std::move(flats));
}

Matroid Matroid::uniform(std::size_t k, std::size_t m) {
  if (k > m) throw std::invalid_argument("uniform matroid needs k <= m");
  if (k == 0) return from_flats(m, {full_mask(m)});
  std::vector<Mask> flats;
  for (std::size_t s = 0; s < k; ++s) {
    for (Mask f : k_subsets(m, s)) flats.push_back(f);
  }
  flats.push_back(full_mask(m));
  return from_flats(m, std::move(flats));
}

Matroid Matroid::free(std::size_t m) {
  std::vector<Mask> flats;
  for (std::size_t s = 0; s <= m; ++s) {
    for (Mask f : k_subsets(m, s)) flats.push_back(f);
  }
  return from_flats(m, std::move(flats));
}

bool Matroid::is_flat(Mask s) const {
  return std::binary_search(flats_.begin(), flats_.end(), s,
                            [](Mask a, Mask b) {
                              const int pa = popcount(a), pb = popcount(b);
                              return pa != pb ? pa < pb : a < b;
                            });
}

Mask Matroid::closure(Mask s) const {
  Mask c = full_mask(ground_);
  for (Mask f : flats_)
    if ((f & s) == s) c &= f;
  return c;
}

std::vector<Mask> Matroid::coatoms() const {
  const Mask all = full_mask(ground_);
  std::vector<Mask> out;
  for (Mask f : flats_) {
    if (f == all) continue;
    bool maximal = true;
    for (Mask g : flats_) {
      if (g != all && g != f && (g & f) == f) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

void Matroid::validate() const {
  const Mask all = full_mask(ground_);
  std::unordered_set<Mask> set(flats_.begin(), flats_.end());
  if (!set.count(all)) throw std::invalid_argument("ground set is not a flat");
  for (Mask f : flats_) {
    if (f & ~all) {
      throw std::invalid_argument("flat " + describe(f) +
                                  " leaves the ground set");
    }
  }
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    for (std::size_t j = i + 1; j < flats_.size(); ++j) {
      if (!set.count(flats_[i] & flats_[j])) {
        throw std::invalid_argument(
            "flats not closed under intersection: " + describe(flats_[i]) +
            " and " + describe(flats_[j]));
      }
    }
  }
  // The sets G \ F over covers G of F partition the complement of F.
  for (Mask f : flats_) {
    if (f == all) continue;
    std::unordered_map<std::size_t, Mask> cl;
    for (auto e : mask_elements(all & ~f)) cl[e] = closure(f | bit(e));
    for (const auto& [e, g] : cl) {
      for (auto e2 : mask_elements(g & ~f)) {
        if (cl[e2] != g) {
          throw std::invalid_argument(
              "covers of flat " + describe(f) +
              " do not partition its complement: " + describe(g) + " vs " +
              describe(cl[e2]));
        }
      }
    }
  }
}

std::size_t Matroid::compute_rank() const {
  // Longest chain; flats_ is sorted by cardinality so subsets come first.
  std::vector<std::size_t> height(flats_.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (flats_[j] != flats_[i] && (flats_[j] & flats_[i]) == flats_[j]) {
        height[i] = std::max(height[i], height[j] + 1);
      }
    }
    best = std::max(best, height[i]);
  }
  return best;
}

bool Matroid::is_paving() const {
  if (rank_ == 0) return true;
  const auto co = coatoms();
  std::unordered_set<Mask> coset(co.begin(), co.end());
  for (Mask s : k_subsets(ground_, rank_ - 1)) {
    if (!coset.count(closure(s))) return false;
  }
  return true;
}

Matroid Matroid::contract(std::size_t e) const {
  if (e >= ground_) throw std::invalid_argument("unknown element");
  const Mask low = bit(e) - 1;
  std::vector<Mask> flats;
  for (Mask f : flats_) {
    if (!(f & bit(e))) continue;
    const Mask g = f & ~bit(e);
    flats.push_back((g & low) | ((g >> 1) & ~low));
  }
  return from_flats(ground_ - 1, std::move(flats));
}

std::vector<Mask> family_coatoms(std::size_t n, std::size_t k,
                                 const std::vector<Mask>& family) {
  if (k == 0) throw std::invalid_argument("family_coatoms needs k >= 1");
  std::vector<Mask> out(family.begin(), family.end());
  for (Mask s : k_subsets(n, k)) {
    bool inside = false;
    for (Mask t : family)
      if ((s & t) == s) inside = true;
    if (!inside) out.push_back(s);
  }
  for (Mask s : k_subsets(n, k - 1)) out.push_back(s | bit(n));
  return out;
}

Matroid family_matroid(std::size_t n, std::size_t k,
                       const std::vector<Mask>& family) {
  return Matroid::from_coatoms(n + 1, family_coatoms(n, k, family));
}

}  // namespace msarr
