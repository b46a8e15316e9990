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

#include "msarr/msbuild.hpp"

#include <sstream>

namespace msarr {

namespace {

Matrix<Rational> integer_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> m(rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

}  // namespace

GenericArrangement<Rational> rational_example_base(const std::string& name) {
  if (name == "ms-3.1") {
    return GenericArrangement<Rational>(integer_matrix({{1, 0, 1, -1}, {0, 1, 1, 1}}));
  }
  if (name == "falk") {
    return GenericArrangement<Rational>(
        integer_matrix({{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 3, 2}, {0, 0, 1, 2, 2, 1}}));
  }
  if (name == "b63") {
    // Gale dual of six points in convex position whose long diagonals
    // bound a simple triangle.
    return GenericArrangement<Rational>(integer_matrix({{-23, 34, -40, 29, 0, 0},
                                                        {-8, 9, -5, 0, 4, 0},
                                                        {-122, 111, -47, 0, 0, 58}}));
  }
  constexpr std::string_view kMoment = "moment:";
  if (name.rfind(kMoment, 0) == 0) {
    std::vector<Rational> s;
    std::stringstream ss(name.substr(kMoment.size()));
    std::string item;
    while (std::getline(ss, item, ',')) s.push_back(Rational::parse(item));
    if (s.size() < 2) throw std::invalid_argument("moment base needs at least two parameters");
    return moment_curve_base(s);
  }
  throw std::invalid_argument("unknown example '" + name + "'");
}

GenericArrangement<QSqrt5> h3_base() {
  const QSqrt5 phi = QSqrt5::golden_ratio();
  const QSqrt5 o(1), z(0);
  Matrix<QSqrt5> m{{o, o, z, z, phi, -phi}, {z, z, phi, -phi, o, o}, {phi, -phi, o, o, z, z}};
  return GenericArrangement<QSqrt5>(std::move(m));
}

}  // namespace msarr
