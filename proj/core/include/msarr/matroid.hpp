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

// Matroids stored by their full family of flats over a ground set [m].

#ifndef MSARR_MATROID_HPP_
#define MSARR_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace msarr {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full_mask(std::size_t m) {
  return m >= 64 ? ~Mask{0} : (bit(m) - 1);
}
std::vector<std::size_t> mask_elements(Mask m);
Mask mask_of(const std::vector<std::size_t>& elements);

class Matroid {
 public:
  // Validates the flat axioms; throws std::invalid_argument naming the
  // offending flat or partition on failure.
  static Matroid from_flats(std::size_t ground, std::vector<Mask> flats);
  // Closes the coatoms under intersection and adds the ground set.
  static Matroid from_coatoms(std::size_t ground, const std::vector<Mask>& coatoms);

  static Matroid uniform(std::size_t k, std::size_t m);
  static Matroid free(std::size_t m);

  std::size_t ground() const { return ground_; }
  // Sorted by (cardinality, value).
  const std::vector<Mask>& flats() const { return flats_; }
  bool is_flat(Mask s) const;
  Mask closure(Mask s) const;
  std::vector<Mask> coatoms() const;
  std::size_t rank() const { return rank_; }
  bool is_paving() const;
  // Contraction by e; surviving elements keep their order and are
  // renumbered to [m-1].
  Matroid contract(std::size_t e) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.flats_ == b.flats_;
  }

 private:
  Matroid() = default;
  void validate() const;
  std::size_t compute_rank() const;

  std::size_t ground_ = 0;
  std::vector<Mask> flats_;
  std::size_t rank_ = 0;
};

// Coatoms 𝕋 ∪ {k-subsets in no member} ∪ {S ∪ {n+1} : |S| = k-1} of the
// rank k+1 paving matroid on [n+1] attached to a family of subsets of [n].
std::vector<Mask> family_coatoms(std::size_t n, std::size_t k,
                                 const std::vector<Mask>& family);
Matroid family_matroid(std::size_t n, std::size_t k,
                       const std::vector<Mask>& family);

// All subsets of [m] of the given size, in lexicographic order.
std::vector<Mask> k_subsets(std::size_t m, std::size_t size);
// "1245"-style rendering for m <= 9, "1-2-4-5" otherwise (1-based).
std::string subset_label(Mask s, std::size_t m);

}  // namespace msarr

#endif  // MSARR_MATROID_HPP_
