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
#include <map>
#include <stdexcept>

#include "msarr/msbuild.hpp"
#include "msarr/pnk.hpp"

namespace msarr {
namespace {

using Q = Rational;

// Direct check of the three defining conditions.
bool oracle_member(const std::vector<Mask>& f, std::size_t k) {
  for (Mask t : f)
    if (static_cast<std::size_t>(popcount(t)) < k + 1) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j && (f[i] & f[j]) == f[i]) return false;
  for (Mask sub = 1; sub < (Mask{1} << f.size()); ++sub) {
    if (popcount(sub) < 2) continue;
    Mask u = 0;
    long sum = 0;
    for (auto i : mask_elements(sub)) {
      u |= f[i];
      sum += popcount(f[i]) - static_cast<long>(k);
    }
    if (!(popcount(u) - static_cast<long>(k) > sum)) return false;
  }
  return true;
}

// Counts per rank of all elements with at most `max_members` members.
std::vector<std::size_t> oracle_counts(std::size_t n, std::size_t k, std::size_t max_rank) {
  std::vector<Mask> pool;
  for (std::size_t s = k + 1; s <= n; ++s)
    for (Mask t : k_subsets(n, s)) pool.push_back(t);
  std::vector<std::size_t> counts(max_rank + 1, 0);
  counts[0] = 1;
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t rank) -> void {
    for (std::size_t i = start; i < pool.size(); ++i) {
      const std::size_t r = rank + popcount(pool[i]) - k;
      if (r > max_rank) continue;
      cur.push_back(pool[i]);
      if (oracle_member(cur, k)) {
        ++counts[r];
        self(self, i + 1, r);
      }
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return counts;
}

TEST(IsPnkElement, Examples) {
  EXPECT_TRUE(is_pnk_element(SetFamily::parse(5, 2, "123")).member);
  const auto falk = is_pnk_element(SetFamily::parse(6, 3, "1245,1346,2356"));
  EXPECT_FALSE(falk.member);
  EXPECT_EQ(falk.condition, "iii");
  const auto pair = is_pnk_element(SetFamily::parse(5, 2, "123,124"));
  EXPECT_FALSE(pair.member);
  EXPECT_EQ(pair.condition, "iii");
  EXPECT_EQ(is_pnk_element(SetFamily::parse(5, 2, "12")).condition, "i");
  EXPECT_EQ(is_pnk_element(SetFamily::parse(5, 2, "123,1234")).condition, "ii");
  EXPECT_TRUE(is_pnk_element(SetFamily::parse(7, 2, "1234,567")).member);
}

TEST(IsPnkElement, AgreesWithOracle) {
  const std::size_t n = 6, k = 2;
  std::vector<Mask> pool;
  for (std::size_t s = 2; s <= n; ++s)
    for (Mask t : k_subsets(n, s)) pool.push_back(t);
  std::size_t members = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); j += 3)
      for (std::size_t l = j + 1; l < pool.size(); l += 7) {
        const std::vector<Mask> f{pool[i], pool[j], pool[l]};
        const bool m = is_pnk_element(SetFamily(n, k, f)).member;
        EXPECT_EQ(m, oracle_member(f, k));
        members += m;
      }
  EXPECT_GT(members, 0u);
}

TEST(PnkRank, Examples) {
  EXPECT_EQ(pnk_rank(SetFamily::parse(5, 2, "123")), 1u);
  EXPECT_EQ(pnk_rank(SetFamily::parse(6, 3, "123456")), 3u);
  EXPECT_EQ(pnk_rank(SetFamily::parse(7, 2, "1234,567")), 3u);
  EXPECT_THROW(pnk_rank(SetFamily::parse(6, 3, "1245,1346,2356")), std::invalid_argument);
}

TEST(EnumeratePnk, Examples) {
  const auto p52 = enumerate_pnk(5, 2, 3);
  ASSERT_EQ(p52.size(), 4u);
  EXPECT_EQ(p52[0].size(), 1u);
  EXPECT_EQ(p52[1].size(), 10u);
  for (const auto& f : p52[1]) EXPECT_EQ(f.size(), 1u);
  ASSERT_EQ(p52[3].size(), 1u);
  EXPECT_EQ(p52[3][0], SetFamily::parse(5, 2, "12345"));

  const auto lattice = build_ms(rational_example_base("moment:1,2,3,4,5")).arrangement.lattice();
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(p52[r].size(), lattice.level(r).size());
  EXPECT_THROW(enumerate_pnk(9, 2, 2), GuardExceeded);
}

TEST(EnumeratePnk, MatchesBruteForce) {
  for (auto [n, k, r] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {5, 2, 3}, {6, 2, 4}, {6, 3, 3}, {7, 4, 3}, {7, 3, 3}}) {
    const auto levels = enumerate_pnk(n, k, r);
    std::vector<std::size_t> counts;
    for (const auto& l : levels) counts.push_back(l.size());
    counts.resize(r + 1, 0);
    EXPECT_EQ(counts, oracle_counts(n, k, r)) << n << "," << k;
    for (const auto& l : levels)
      for (std::size_t i = 1; i < l.size(); ++i) EXPECT_TRUE(l[i - 1] < l[i]);
  }
}

TEST(LatticeIsomorphic, Examples) {
  EXPECT_TRUE(lattice_isomorphic_to_pnk(build_ms(rational_example_base("moment:1,2,3,4,5"))).isomorphic);
  const auto falk = lattice_isomorphic_to_pnk(build_ms(rational_example_base("falk")));
  EXPECT_FALSE(falk.isomorphic);
  const auto named = SetFamily::parse(6, 3, "1245,1346,2356");
  EXPECT_NE(std::find(falk.counterexamples.begin(), falk.counterexamples.end(), named),
            falk.counterexamples.end());
  EXPECT_FALSE(lattice_isomorphic_to_pnk(build_ms(h3_base())).isomorphic);
}

TEST(LatticeIsomorphic, AgreesWithVeryGeneric) {
  for (const char* name : {"moment:1,2,3,4,5", "moment:0,1,3,7,8,20", "falk", "b63", "ms-3.1"}) {
    const auto ms = build_ms(rational_example_base(name));
    EXPECT_EQ(lattice_isomorphic_to_pnk(ms).isomorphic, is_very_generic(ms).very_generic) << name;
  }
  const auto h3 = build_ms(h3_base());
  EXPECT_EQ(lattice_isomorphic_to_pnk(h3).isomorphic, is_very_generic(h3).very_generic);
  for (std::uint64_t seed : {1, 2}) {
    const auto ms = random_very_generic(6, 3, seed);
    EXPECT_TRUE(lattice_isomorphic_to_pnk(ms).isomorphic);
  }
}

TEST(PnkOrder, EmbedsReversedInclusion) {
  const auto ms = build_ms(rational_example_base("moment:1,2,4,8,16"));
  std::vector<SetFamily> all;
  for (const auto& l : enumerate_pnk(5, 2, 3)) all.insert(all.end(), l.begin(), l.end());
  std::vector<Mask> masks;
  for (const auto& t : all) {
    const auto x = family_flat(ms, t);
    EXPECT_EQ(x.codim, pnk_rank(t));
    masks.push_back(x.mask);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      EXPECT_EQ(pnk_leq(all[i], all[j]), (masks[i] & masks[j]) == masks[i]);
}

TEST(PnkOrder, Examples) {
  EXPECT_TRUE(pnk_leq(SetFamily::parse(5, 2, "123"), SetFamily::parse(5, 2, "1234")));
  EXPECT_FALSE(pnk_leq(SetFamily::parse(5, 2, "1234"), SetFamily::parse(5, 2, "123")));
  EXPECT_TRUE(pnk_leq(SetFamily(5, 2, {}), SetFamily::parse(5, 2, "123")));
}

}  // namespace
}  // namespace msarr
