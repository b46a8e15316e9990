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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "msarr/arrangement.hpp"
#include "msarr/matroid.hpp"
#include "msarr/msbuild.hpp"
#include "msarr/nonvgen.hpp"
#include "msarr/setfamily.hpp"

namespace msarr {
namespace {

using Q = Rational;

TEST(Masks, Helpers) {
  EXPECT_EQ(mask_elements(0b10110), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(mask_of({1, 2, 4}), 0b10110u);
  EXPECT_EQ(full_mask(0), 0u);
  EXPECT_EQ(full_mask(64), ~Mask{0});
  // Lexicographic in the sorted tuples.
  EXPECT_EQ(k_subsets(4, 2), (std::vector<Mask>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}));
  EXPECT_EQ(subset_label(0b110110, 6), "2356");
  EXPECT_EQ(subset_label(bit(0) | bit(9), 10), "1-10");
}

TEST(Uniform, FlatsAndRank) {
  const auto u = Matroid::uniform(3, 6);
  EXPECT_EQ(u.rank(), 3u);
  // Flats: all sets of size <= 2 plus the ground set.
  EXPECT_EQ(u.flats().size(), 1u + 6u + 15u + 1u);
  for (Mask s = 0; s < 64; ++s)
    EXPECT_EQ(u.is_flat(s), popcount(s) <= 2 || s == 63u);
  EXPECT_TRUE(u.is_paving());
  auto pairs = k_subsets(6, 2);
  std::sort(pairs.begin(), pairs.end());
  auto coatoms = u.coatoms();
  std::sort(coatoms.begin(), coatoms.end());
  EXPECT_EQ(coatoms, pairs);
  EXPECT_EQ(Matroid::from_coatoms(6, k_subsets(6, 2)), u);
}

TEST(Free, Properties) {
  const auto f = Matroid::free(4);
  EXPECT_EQ(f.rank(), 4u);
  EXPECT_EQ(f.flats().size(), 16u);
  // Every 3-subset is a coatom.
  EXPECT_TRUE(f.is_paving());
  EXPECT_EQ(f.contract(2), Matroid::free(3));
  EXPECT_EQ(f.closure(0b0101), 0b0101u);
}

// e1, e2, e3, e4, e1+e2: the circuit {1,2,5} is smaller than the rank.
TEST(Paving, ShortCircuitIsNotPaving) {
  const std::vector<Vec<Q>> v{{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(1), Q(0), Q(0)},
                              {Q(0), Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(0), Q(1)},
                              {Q(1), Q(1), Q(0), Q(0)}};
  const auto m = matroid_of_vectors(4, v);
  EXPECT_EQ(m.rank(), 4u);
  EXPECT_FALSE(m.is_paving());
  EXPECT_EQ(m.closure(0b00011), 0b10011u);
}

TEST(Closure, Uniform) {
  const auto u = Matroid::uniform(3, 5);
  EXPECT_EQ(u.closure(0b00011), 0b00011u);
  EXPECT_EQ(u.closure(0b00111), 0b11111u);
  EXPECT_EQ(u.closure(0), 0u);
}

TEST(FromFlats, RejectsAxiomViolations) {
  // Missing ground set.
  EXPECT_THROW(Matroid::from_flats(3, {0, 1, 2, 4}), std::invalid_argument);
  // Not closed under intersection.
  EXPECT_THROW(Matroid::from_flats(3, {0, 0b011, 0b110, 0b111}), std::invalid_argument);
  // Covers of the empty flat do not partition the ground set.
  EXPECT_THROW(Matroid::from_flats(3, {0, 0b001, 0b111}), std::invalid_argument);
}

TEST(FromCoatoms, Rejections) {
  EXPECT_THROW(Matroid::from_coatoms(4, {0b0011, 0b0111}), std::invalid_argument);
  EXPECT_THROW(Matroid::from_coatoms(3, {0b111}), std::invalid_argument);
  // Covers of {2} miss element 4.
  EXPECT_THROW(Matroid::from_coatoms(4, {0b0011, 0b0110}), std::invalid_argument);
  // Two coatoms meeting in loops are fine.
  EXPECT_EQ(Matroid::from_coatoms(4, {0b0111, 0b1011}).rank(), 2u);
}

TEST(Contract, UniformDropsRank) {
  for (std::size_t e = 0; e < 6; ++e) EXPECT_EQ(Matroid::uniform(3, 6).contract(e), Matroid::uniform(2, 5));
  EXPECT_THROW(Matroid::uniform(3, 6).contract(6), std::invalid_argument);
}

// Coatoms determine the matroid.
TEST(Coatoms, RoundTrip) {
  std::vector<Matroid> cases{Matroid::uniform(2, 4), Matroid::free(3),
                             matroid_of_arrangement(braid_arrangement<Q>(4)),
                             matroid_of_arrangement(build_ms(rational_example_base("falk")).arrangement),
                             matroid_of_arrangement(build_ms(rational_example_base("moment:1,2,3,4,5")).arrangement)};
  for (const auto& m : cases) EXPECT_EQ(Matroid::from_coatoms(m.ground(), m.coatoms()), m);
}

TEST(FamilyMatroid, RankAndPaving) {
  for (const char* f : {"1245,1346,2356", "3456,1256,1234", "123456", ""}) {
    const auto fam = SetFamily::parse(6, 3, f);
    const auto m = family_matroid(6, 3, fam.members());
    EXPECT_EQ(m.ground(), 7u);
    EXPECT_EQ(m.rank(), 4u);
    EXPECT_TRUE(m.is_paving());
    for (Mask T : fam.members()) EXPECT_TRUE(m.is_flat(T));
  }
  EXPECT_EQ(family_matroid(6, 3, {}), Matroid::uniform(4, 7));
  const auto coatoms = family_coatoms(5, 2, {0b00111});
  // The member, 2-subsets outside it, and singletons with the extra point.
  EXPECT_EQ(coatoms.size(), 1u + 7u + 5u);
}

// Matroid of the cone restricted to the added hyperplane is the contraction.
TEST(Contract, ConeRestriction) {
  std::mt19937_64 rng(3);
  for (const char* name : {"moment:1,2,4,8,16", "falk", "b63"}) {
    const auto ms = build_ms(rational_example_base(name));
    for (const auto* x : ms.arrangement.lattice().all()) {
      const auto cone = coned_arrangement(ms.base, generic_point(ms.arrangement, *x, rng));
      const std::size_t last = cone.size() - 1;
      EXPECT_EQ(matroid_of_vectors(cone.dim() - 1, restriction(cone, last)),
                matroid_of_arrangement(cone).contract(last));
    }
  }
  const auto br = braid_arrangement<Q>(4);
  const auto e = essentialize(br).arrangement;
  for (std::size_t h = 0; h < e.size(); ++h)
    EXPECT_EQ(matroid_of_vectors(e.dim() - 1, restriction(e, h)), matroid_of_arrangement(e).contract(h));
}

TEST(SetFamily, ParseAndPrint) {
  const auto f = SetFamily::parse(6, 3, "2356,1245,1346");
  EXPECT_EQ(f.str(), "{1245,1346,2356}");
  EXPECT_EQ(f.lists()[0], (std::vector<std::size_t>{1, 2, 4, 5}));
  EXPECT_EQ(SetFamily::from_lists(6, 3, {{1, 2, 4, 5}, {1, 3, 4, 6}, {2, 3, 5, 6}}), f);
  EXPECT_EQ(f.union_mask(), full_mask(6));
  EXPECT_TRUE(f.is_antichain());
  EXPECT_FALSE(SetFamily::parse(6, 3, "123,1234").is_antichain());
  EXPECT_THROW(SetFamily::parse(6, 3, "127"), std::invalid_argument);
  EXPECT_THROW(SetFamily::from_lists(6, 3, {{0, 1}}), std::invalid_argument);
}

}  // namespace
}  // namespace msarr
