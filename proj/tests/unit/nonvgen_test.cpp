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

#include <random>
#include <stdexcept>

#include "msarr/msbuild.hpp"
#include "msarr/nonvgen.hpp"
#include "msarr/pnk.hpp"
#include "msarr/sigma.hpp"
#include "oracles.hpp"

namespace msarr {
namespace {

using Q = Rational;

Mask subset(std::initializer_list<std::size_t> one_based) {
  Mask m = 0;
  for (auto e : one_based) m |= bit(e - 1);
  return m;
}

// Every (s x s) minor of m vanishes.
bool all_minors_vanish(const Matrix<Q>& m, std::size_t s) {
  for (Mask rows : k_subsets(m.rows(), s))
    for (Mask cols : k_subsets(m.cols(), s))
      if (!det(m.select_rows(mask_elements(rows)).select_cols(mask_elements(cols))).is_zero())
        return false;
  return true;
}

Matrix<Q> with_first_column(Matrix<Q> g, const Vec<Q>& a1) {
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, 0) = a1[i];
  return g;
}

TEST(CheckQ1Q2, NamesTheCondition) {
  EXPECT_NO_THROW(check_q1_q2(SetFamily::parse(6, 3, "1245,1346,2356")));
  try {
    check_q1_q2(SetFamily::parse(6, 3, "123,1456"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(Q1)"), std::string::npos);
  }
  try {
    check_q1_q2(SetFamily::parse(6, 3, "1234,1235"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(Q2)"), std::string::npos);
  }
}

TEST(AFamilyMatrix, SingleMember) {
  const auto g = rational_example_base("b63");
  const auto m = a_family_matrix(g, SetFamily::parse(6, 3, "1245"));
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.row(0), alpha_I(g, subset({1, 2, 4, 5})));
  EXPECT_THROW(a_family_matrix(g, SetFamily::parse(6, 3, "124")), std::invalid_argument);
}

TEST(AFamilyMatrix, FalkRowsMatchPrintedMatrix) {
  const auto g = rational_example_base("falk");
  const auto m = a_family_matrix(g, SetFamily::parse(6, 3, "1245,1346,2356"));
  const Matrix<Q> printed{{Q(2), Q(2), Q(0), Q(2), Q(-2), Q(0)},
                          {Q(-2), Q(0), Q(2), Q(-2), Q(0), Q(2)},
                          {Q(0), Q(-2), Q(-2), Q(0), Q(2), Q(-2)}};
  ASSERT_EQ(m.rows(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix<Q> pair(0, 6);
    pair.append_row(m.row(i));
    pair.append_row(printed.row(i));
    EXPECT_EQ(rank(pair), 1u) << "row " << i;
  }
  EXPECT_EQ(rank(m), 2u);
}

TEST(AFamilyMatrix, RowSpaceIsNormalSpaceOfTheIntersection) {
  const auto ms = random_very_generic(6, 2, 4);
  for (const auto& level : enumerate_pnk(6, 2, 4))
    for (const auto& t : level) {
      if (t.empty()) continue;
      const auto m = a_family_matrix(ms.base, t);
      Mask through = 0;
      for (Mask T : t.members()) through |= d_flat(ms, T).mask;
      const auto x = ms.arrangement.flat_of(through);
      EXPECT_EQ(rank(m), x.codim);
      for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(x.normal_space.contains(m.row(i)));
    }
}

TEST(InVariety, Examples) {
  const auto falk = SetFamily::parse(6, 3, "1245,1346,2356");
  EXPECT_TRUE(in_variety(rational_example_base("falk"), falk, 2));
  const auto vg = random_very_generic(6, 3, 8);
  EXPECT_FALSE(in_variety(vg.base, falk, 2));
  EXPECT_TRUE(in_variety(vg.base, falk, 3));
  EXPECT_TRUE(in_variety(rational_example_base("falk"), falk, 3));
}

TEST(Families, Rank3) {
  EXPECT_EQ(rank3_family(6, 3), SetFamily::parse(6, 3, "3456,1256,1234"));
  const auto f7 = rank3_family(7, 4);
  EXPECT_EQ(f7.size(), 3u);
  for (Mask t : f7.members()) EXPECT_EQ(popcount(t), 5);
  EXPECT_THROW(rank3_family(6, 2), std::invalid_argument);
  EXPECT_THROW(rank3_family(5, 2), std::invalid_argument);
}

TEST(CyclicMap, Cases) {
  EXPECT_EQ(cyclic_map_c(4), (std::vector<std::size_t>{4, 5, 6}));
  EXPECT_EQ(cyclic_map_c(5), (std::vector<std::size_t>{5, 6, 5, 7}));
  EXPECT_EQ(cyclic_map_c(6), (std::vector<std::size_t>{6, 7, 8, 7, 8}));
  EXPECT_EQ(cyclic_map_c(7), (std::vector<std::size_t>{7, 8, 7, 8, 9, 8}));
  EXPECT_THROW(cyclic_map_c(3), std::invalid_argument);
  for (std::size_t r = 4; r <= 12; ++r)
    for (auto v : cyclic_map_c(r)) {
      EXPECT_GE(v, r);
      EXPECT_LE(v, r + 2);
    }
}

TEST(Families, RankR) {
  const auto f = rank_r_family(6, 2);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_NO_THROW(check_q1_q2(f));
  for (Mask t : f.members()) EXPECT_EQ(popcount(t), 3);
  EXPECT_THROW(rank_r_family(5, 2), std::invalid_argument);
}

// The defining equations are affine in alpha_1 along any line.
TEST(Equations, AffineInFirstColumn) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 3}, {7, 4}, {6, 2}, {7, 2}}) {
      const auto g = random_integer_matrix(k, n, rng, 30);
      const auto u = random_integer_matrix(k, 1, rng, 30).col(0);
      const auto v = random_integer_matrix(k, 1, rng, 30).col(0);
      Vec<Q> u1 = u, u2 = u;
      for (std::size_t i = 0; i < k; ++i) {
        u1[i] += v[i];
        u2[i] += Q(2) * v[i];
      }
      auto eq = [&](const Matrix<Q>& m) { return n - k == 3 ? rank3_equation(m) : rank_r_equation(m); };
      const Q f0 = eq(with_first_column(g, u)), f1 = eq(with_first_column(g, u1)),
              f2 = eq(with_first_column(g, u2));
      EXPECT_EQ(f0 - Q(2) * f1 + f2, Q(0));
    }
  }
}

// Off the hypersurface the family spans its full rank.
TEST(Equations, NonzeroAtRandomBases) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g3 = random_integer_matrix(3, 6, rng, 50);
    if (!is_generic(g3)) continue;
    EXPECT_NE(rank3_equation(g3), Q(0));
    EXPECT_FALSE(in_variety(GenericArrangement<Q>(g3), rank3_family(6, 3), 2));
    const auto g2 = random_integer_matrix(2, 6, rng, 50);
    if (!is_generic(g2)) continue;
    EXPECT_NE(rank_r_equation(g2), Q(0));
    EXPECT_FALSE(in_variety(GenericArrangement<Q>(g2), rank_r_family(6, 2), 3));
  }
}

TEST(WitnessRank3, SixThree) {
  const auto w = witness_rank3(6, 3, 1);
  EXPECT_TRUE(w.verified());
  EXPECT_EQ(w.construction, "rank3");
  EXPECT_EQ(w.target_codim, 2u);
  EXPECT_EQ(w.family, rank3_family(6, 3));
  EXPECT_EQ(rank3_equation(w.witness_base.matrix()), Q(0));
  EXPECT_TRUE(is_generic(w.witness_base.matrix()));

  // Independent re-audit of the intersection.
  const auto ms = build_ms(w.witness_base);
  const Mask coincident = ms.subsets_mask(w.family.members());
  for (Mask I : w.family.members())
    for (Mask J : w.family.members())
      if (I < J) EXPECT_EQ(testing::rank_of(ms.arrangement, ms.subsets_mask({I, J})), 2u);
  EXPECT_EQ(testing::rank_of(ms.arrangement, coincident), 2u);
  const auto x = ms.arrangement.flat_of(coincident);
  EXPECT_EQ(x.mask, coincident);
  EXPECT_EQ(canonical_presentation(ms, x), SetFamily(6, 3, w.family.members()));
  EXPECT_FALSE(is_very_generic(ms).very_generic);

  // One vanishing minor forces all.
  EXPECT_TRUE(all_minors_vanish(a_family_matrix(w.witness_base, w.family), 3));

  const auto again = witness_rank3(6, 3, 1);
  EXPECT_EQ(again.witness_base.matrix(), w.witness_base.matrix());
  EXPECT_EQ(again.attempts, w.attempts);
}

TEST(WitnessRankR, SixTwo) {
  const auto w = witness_rank_r(6, 2, 1);
  EXPECT_TRUE(w.verified());
  EXPECT_EQ(w.target_codim, 3u);
  EXPECT_EQ(rank_r_equation(w.witness_base.matrix()), Q(0));
  const auto ms = build_ms(w.witness_base);
  const auto& members = w.family.members();
  const std::size_t r = members.size();
  for (Mask J = 1; J + 1 < (Mask{1} << r); ++J) {
    std::vector<Mask> sel;
    for (auto j : mask_elements(J)) sel.push_back(members[j]);
    EXPECT_EQ(testing::rank_of(ms.arrangement, ms.subsets_mask(sel)),
              static_cast<std::size_t>(popcount(J)));
  }
  const Mask coincident = ms.subsets_mask(members);
  EXPECT_EQ(testing::rank_of(ms.arrangement, coincident), r - 1);
  EXPECT_EQ(ms.arrangement.flat_of(coincident).mask, coincident);
  EXPECT_TRUE(all_minors_vanish(a_family_matrix(w.witness_base, w.family), r));
}

TEST(Witness, Rejections) {
  EXPECT_THROW(witness_rank3(6, 2, 1), std::invalid_argument);
  EXPECT_THROW(witness_rank_r(6, 3, 1), std::invalid_argument);
  WitnessOptions none;
  none.retries = 0;
  EXPECT_THROW(witness_rank3(6, 3, 1, none), RetryExhausted);
}

TEST(Perturb, Rank3WitnessYieldsJump) {
  const auto w = witness_rank3(6, 3, 2);
  const auto p = perturb_to_very_generic(w, 1000000, 2);
  EXPECT_TRUE(is_very_generic(p.ms).very_generic);
  EXPECT_EQ(p.coincident, w.family.members());
  const auto ess = essentialize(p.ms.arrangement).arrangement;
  const Mask walls = p.ms.subsets_mask(p.coincident);
  const auto pick = pick_simple_chamber(ess, walls);
  ASSERT_TRUE(pick);
  EXPECT_TRUE(pick->walls_match);
  const auto chamber = SignVector::from_mask(pick->chamber, ess.size());
  EXPECT_TRUE(is_simple_chamber(ess, chamber));
  const auto e = epsilon_C(ess, chamber);
  EXPECT_TRUE(in_sigma_p(p.ms.arrangement, e, 2).member);
  const auto rep = in_sigma_p(p.ms.arrangement, e, 3);
  EXPECT_FALSE(rep.member);
  EXPECT_TRUE(verify_gordan(p.ms.arrangement, e, *rep.certificate));
}

TEST(Perturb, VeryGenericBaseStaysVeryGeneric) {
  WitnessSpec w{5, 2, "given", SetFamily::parse(5, 2, "123"), 1,
                rational_example_base("moment:1,2,4,8,16"),
                {{"generic base", "true", "true", true}}, 0, 0};
  const auto p = perturb_to_very_generic(w, 1000, 3);
  EXPECT_TRUE(is_very_generic(p.ms).very_generic);
  EXPECT_EQ(p.attempts, 1u);

  w.audit.push_back({"defining equation", "0", "1", false});
  EXPECT_THROW(perturb_to_very_generic(w, 1000, 3), std::invalid_argument);
}

TEST(GenericPoint, LiesOnlyOnTheFlat) {
  const auto ms = build_ms(rational_example_base("falk"));
  std::mt19937_64 rng(1);
  for (const auto* x : ms.arrangement.lattice().all()) {
    const auto t = generic_point(ms.arrangement, *x, rng);
    for (std::size_t h = 0; h < ms.arrangement.size(); ++h)
      EXPECT_EQ(dot(ms.arrangement.normal(h), t).is_zero(), (x->mask >> h & 1) == 1);
  }
}

// The cone over the translate t in X has matroid M(T(X)).
TEST(ConedArrangement, MatroidOfFamily) {
  std::mt19937_64 rng(2);
  for (const char* name : {"falk", "moment:1,2,4,8,16", "b63"}) {
    const auto ms = build_ms(rational_example_base(name));
    for (const auto* x : ms.arrangement.lattice().all()) {
      const auto t = generic_point(ms.arrangement, *x, rng);
      const auto coned = coned_arrangement(ms.base, t);
      EXPECT_EQ(coned.size(), ms.n() + 1);
      EXPECT_EQ(matroid_of_arrangement(coned),
                family_matroid(ms.n(), ms.k(), canonical_presentation(ms, *x).members()))
          << name;
    }
  }
  EXPECT_THROW(coned_arrangement(rational_example_base("falk"), Vec<Q>(3)), std::invalid_argument);
}

}  // namespace
}  // namespace msarr
