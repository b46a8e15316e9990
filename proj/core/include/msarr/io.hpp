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

// JSON encoding of the library types. Scalars are strings, subsets are
// 1-based element lists, flats are sorted label lists.

#ifndef MSARR_IO_HPP_
#define MSARR_IO_HPP_

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "msarr/arrangement.hpp"
#include "msarr/matroid.hpp"
#include "msarr/msbuild.hpp"
#include "msarr/nonvgen.hpp"
#include "msarr/setfamily.hpp"
#include "msarr/sigma.hpp"

namespace msarr {

using json = nlohmann::json;

template <OrderedField F>
json to_json(const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <OrderedField F>
Vec<F> vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  Vec<F> v;
  for (const auto& x : j) {
    if (!x.is_string()) throw std::invalid_argument("scalars must be JSON strings");
    v.push_back(F::parse(x.get<std::string>()));
  }
  return v;
}

template <OrderedField F>
json to_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

template <OrderedField F>
Matrix<F> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<Vec<F>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json<F>(r));
  return Matrix<F>::from_rows(rows, rows[0].size());
}

json mask_to_list(Mask m);
Mask mask_from_list(const json& j, std::size_t n);

json to_json(const SetFamily& f);
SetFamily set_family_from_json(const json& j);

json to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

template <OrderedField F>
json to_json(const CentralArrangement<F>& a) {
  json hs = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    hs.push_back({{"label", a.label(i)}, {"normal", to_json(a.normal(i))}});
  return {{"dim", a.dim()}, {"field", std::string(FieldTraits<F>::name)}, {"hyperplanes", hs}};
}

// Reads the "field" key when present; a mismatch with F throws.
template <OrderedField F>
CentralArrangement<F> arrangement_from_json(const json& j) {
  if (j.contains("field") && j.at("field").get<std::string>() != FieldTraits<F>::name) {
    throw std::invalid_argument("arrangement field is " + j.at("field").get<std::string>());
  }
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  std::vector<Vec<F>> normals;
  for (const auto& h : j.at("hyperplanes")) {
    labels.push_back(h.at("label").get<std::string>());
    normals.push_back(vec_from_json<F>(h.at("normal")));
  }
  return CentralArrangement<F>(dim, std::move(labels), std::move(normals));
}

// Field of an arrangement document, "Q" when absent.
inline std::string arrangement_field(const json& j) {
  return j.contains("field") ? j.at("field").get<std::string>() : std::string("Q");
}

template <OrderedField F>
json to_json(const MSArrangement<F>& m) {
  json out = to_json(m.arrangement);
  out["base"] = {{"n", m.n()}, {"k", m.k()}, {"matrix", to_json(m.base.matrix())}};
  return out;
}

template <OrderedField F>
json to_json(const CentralArrangement<F>& a, const Flat<F>& x) {
  json labels = json::array();
  for (auto h : x.closed_set) labels.push_back(a.label(h));
  return {{"hyperplanes", labels}, {"codim", x.codim}};
}

template <OrderedField F>
json to_json(const CentralArrangement<F>& a, const GordanCertificate<F>& c) {
  json labels = json::array();
  for (auto h : c.support) labels.push_back(a.label(h));
  return {{"support", labels}, {"lambda", to_json(c.lambda)}};
}

template <OrderedField F>
json lattice_json(const CentralArrangement<F>& a, const Lattice<F>& l) {
  json levels = json::array();
  for (const auto& lev : l.levels()) {
    json flats = json::array();
    for (const auto& x : lev) flats.push_back(to_json(a, x));
    levels.push_back(flats);
  }
  return {{"counts", l.counts()}, {"levels", levels}};
}

template <OrderedField F>
json to_json(const CentralArrangement<F>& a, const SigmaReport<F>& r) {
  json out = {{"sign_vector", r.sign_vector.str()},
              {"level", r.level_tested},
              {"member", r.member},
              {"flats_checked", r.flats_checked}};
  if (r.failing_flat) out["failing_flat"] = to_json(a, *r.failing_flat);
  if (r.certificate) out["certificate"] = to_json(a, *r.certificate);
  json pts = json::array();
  for (const auto& [m, p] : r.witness_points) {
    json labels = json::array();
    for (auto h : mask_elements(m)) labels.push_back(a.label(h));
    pts.push_back({{"flat", labels}, {"point", to_json(p)}});
  }
  out["witness_points"] = pts;
  return out;
}

template <OrderedField F>
json to_json(const CentralArrangement<F>& a, const JumpWitness<F>& w) {
  json out = {{"sign_vector", w.eps.str()},
              {"source", w.source},
              {"failing_flat", to_json(a, w.failing_flat)},
              {"certificate", to_json(a, w.certificate)}};
  if (w.localized_at) {
    json labels = json::array();
    for (auto h : mask_elements(*w.localized_at)) labels.push_back(a.label(h));
    out["localized_at"] = labels;
  }
  return out;
}

json to_json(const AuditEntry& e);
json to_json(const WitnessSpec& w);
WitnessSpec witness_from_json(const json& j);

// Whole-file helpers; parse errors rethrow as std::invalid_argument with
// the path.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace msarr

#endif  // MSARR_IO_HPP_
