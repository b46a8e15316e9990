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

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "msarr/io.hpp"
#include "msarr/msbuild.hpp"
#include "msarr/nonvgen.hpp"
#include "msarr/sigma.hpp"

namespace msarr {
namespace {

using Q = Rational;

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("msarr_io_test_" + name);
}

TEST(Json, VectorsAndMatrices) {
  const Vec<Q> v{Q(1, 2), Q(-3), Q(0)};
  EXPECT_EQ(to_json(v), json::parse(R"(["1/2","-3","0"])"));
  EXPECT_EQ(vec_from_json<Q>(to_json(v)), v);
  EXPECT_THROW(vec_from_json<Q>(json::parse("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(vec_from_json<Q>(json::parse(R"({"a": 1})")), std::invalid_argument);

  const Matrix<Q> m{{Q(1), Q(0), Q(1), Q(-1)}, {Q(0), Q(1), Q(1), Q(1)}};
  EXPECT_EQ(matrix_from_json<Q>(to_json(m)), m);
  EXPECT_THROW(matrix_from_json<Q>(json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json<Q>(json::array()), std::invalid_argument);

  const Vec<QSqrt5> g{QSqrt5::golden_ratio(), QSqrt5(Q(2), Q(-1))};
  EXPECT_EQ(vec_from_json<QSqrt5>(to_json(g)), g);
}

TEST(Json, Arrangements) {
  const auto ms = build_ms(rational_example_base("falk"));
  const json j = to_json(ms);
  EXPECT_EQ(j.at("field"), "Q");
  EXPECT_EQ(j.at("dim"), 6);
  EXPECT_EQ(j.at("hyperplanes").size(), 15u);
  EXPECT_EQ(j.at("base").at("k"), 3);
  const auto back = arrangement_from_json<Q>(j);
  EXPECT_EQ(back.labels(), ms.arrangement.labels());
  EXPECT_EQ(back.normals(), ms.arrangement.normals());

  json nofield = j;
  nofield.erase("field");
  EXPECT_EQ(arrangement_field(nofield), "Q");
  EXPECT_NO_THROW(arrangement_from_json<Q>(nofield));
  EXPECT_THROW(arrangement_from_json<QSqrt5>(j), std::invalid_argument);

  const auto h3 = build_ms(h3_base());
  const json jh = to_json(h3.arrangement);
  EXPECT_EQ(arrangement_field(jh), "Q(rt5)");
  EXPECT_EQ(arrangement_from_json<QSqrt5>(jh).normals(), h3.arrangement.normals());
}

TEST(Json, SetFamilyAndMatroid) {
  const auto f = SetFamily::parse(6, 3, "1245,1346,2356");
  EXPECT_EQ(to_json(f), json::parse(R"({"n":6,"k":3,"members":[[1,2,4,5],[1,3,4,6],[2,3,5,6]]})"));
  EXPECT_EQ(set_family_from_json(to_json(f)), f);
  EXPECT_THROW(set_family_from_json(json::parse(R"({"n":3,"k":1,"members":[[1,4]]})")),
               std::invalid_argument);
  EXPECT_THROW(set_family_from_json(json::parse(R"({"n":3,"k":1,"members":[[1,1]]})")),
               std::invalid_argument);

  const auto m = family_matroid(6, 3, f.members());
  const json jm = to_json(m);
  EXPECT_EQ(jm.at("ground"), 7);
  EXPECT_EQ(matroid_from_json(jm), m);
}

TEST(Json, MaskLists) {
  EXPECT_EQ(mask_to_list(0b1011), json::parse("[1,2,4]"));
  EXPECT_EQ(mask_from_list(json::parse("[1,2,4]"), 4), 0b1011u);
  EXPECT_THROW(mask_from_list(json::parse("[0]"), 4), std::invalid_argument);
  EXPECT_THROW(mask_from_list(json::parse("3"), 4), std::invalid_argument);
}

TEST(Json, ReportsUseLabels) {
  const auto a = braid_arrangement<Q>(3);
  const auto rep = in_sigma_p(a, SignVector::parse("+-+"), 2);
  const json j = to_json(a, rep);
  EXPECT_EQ(j.at("member"), false);
  EXPECT_EQ(j.at("failing_flat").at("codim"), 2);
  EXPECT_EQ(j.at("certificate").at("support"), json::parse(R"(["x1-x2","x1-x3","x2-x3"])"));
  for (const auto& l : j.at("certificate").at("lambda")) EXPECT_TRUE(l.is_string());

  const auto ok = in_sigma_p(a, SignVector::all_plus(3), 2, true);
  const json jo = to_json(a, ok);
  EXPECT_EQ(jo.at("witness_points").size(), 1u);
  EXPECT_FALSE(jo.contains("certificate"));

  const auto lj = lattice_json(a, a.lattice());
  EXPECT_EQ(lj.at("counts"), json::parse("[1,3,1]"));
}

TEST(Json, WitnessRoundTrip) {
  const auto w = witness_rank3(6, 3, 1);
  const json j = to_json(w);
  EXPECT_EQ(j.at("verified"), true);
  EXPECT_EQ(j.at("audit").size(), w.audit.size());
  const auto back = witness_from_json(j);
  EXPECT_EQ(back.witness_base.matrix(), w.witness_base.matrix());
  EXPECT_EQ(back.family, w.family);
  EXPECT_EQ(back.target_codim, w.target_codim);
  EXPECT_EQ(back.seed, w.seed);
  EXPECT_TRUE(back.verified());
  EXPECT_EQ(to_json(back), j);
}

TEST(Files, WriteAndRead) {
  const auto path = temp_file("roundtrip.json").string();
  const json j = to_json(SetFamily::parse(5, 2, "123"));
  write_json_file(path, j);
  EXPECT_EQ(read_json_file(path), j);
  std::filesystem::remove(path);

  const auto bad = temp_file("bad.json").string();
  std::ofstream(bad) << "{not json";
  try {
    read_json_file(bad);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find(bad), std::string::npos);
  }
  std::filesystem::remove(bad);
  EXPECT_THROW(read_json_file(temp_file("missing.json").string()), std::invalid_argument);
}

}  // namespace
}  // namespace msarr
