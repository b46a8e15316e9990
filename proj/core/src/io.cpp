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

#include "msarr/io.hpp"

#include <fstream>
#include <stdexcept>

namespace msarr {

json mask_to_list(Mask m) {
  json out = json::array();
  for (auto e : mask_elements(m)) out.push_back(e + 1);
  return out;
}

Mask mask_from_list(const json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("subset must be a JSON array");
  Mask m = 0;
  for (const auto& e : j) {
    const auto v = e.get<std::size_t>();
    if (v < 1 || v > n) throw std::invalid_argument("element " + std::to_string(v) + " outside [n]");
    if (m & bit(v - 1)) throw std::invalid_argument("repeated element " + std::to_string(v));
    m |= bit(v - 1);
  }
  return m;
}

json to_json(const SetFamily& f) {
  json members = json::array();
  for (Mask t : f.members()) members.push_back(mask_to_list(t));
  return {{"n", f.n()}, {"k", f.k()}, {"members", members}};
}

SetFamily set_family_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto k = j.at("k").get<std::size_t>();
  std::vector<Mask> members;
  for (const auto& t : j.at("members")) members.push_back(mask_from_list(t, n));
  return SetFamily(n, k, std::move(members));
}

json to_json(const Matroid& m) {
  json co = json::array();
  for (Mask c : m.coatoms()) co.push_back(mask_to_list(c));
  return {{"ground", m.ground()}, {"coatoms", co}};
}

Matroid matroid_from_json(const json& j) {
  const auto ground = j.at("ground").get<std::size_t>();
  std::vector<Mask> co;
  for (const auto& c : j.at("coatoms")) co.push_back(mask_from_list(c, ground));
  return Matroid::from_coatoms(ground, co);
}

json to_json(const AuditEntry& e) {
  return {{"condition", e.condition}, {"expected", e.expected}, {"actual", e.actual}, {"ok", e.ok}};
}

json to_json(const WitnessSpec& w) {
  json audit = json::array();
  for (const auto& e : w.audit) audit.push_back(to_json(e));
  return {{"n", w.n},
          {"k", w.k},
          {"construction", w.construction},
          {"family", to_json(w.family)},
          {"target_codim", w.target_codim},
          {"witness_base", to_json(w.witness_base.matrix())},
          {"audit", audit},
          {"seed", w.seed},
          {"attempts", w.attempts},
          {"verified", w.verified()}};
}

WitnessSpec witness_from_json(const json& j) {
  std::vector<AuditEntry> audit;
  for (const auto& e : j.at("audit")) {
    audit.push_back({e.at("condition").get<std::string>(), e.at("expected").get<std::string>(),
                     e.at("actual").get<std::string>(), e.at("ok").get<bool>()});
  }
  WitnessSpec w{j.at("n").get<std::size_t>(),
                j.at("k").get<std::size_t>(),
                j.at("construction").get<std::string>(),
                set_family_from_json(j.at("family")),
                j.at("target_codim").get<std::size_t>(),
                GenericArrangement<Rational>(matrix_from_json<Rational>(j.at("witness_base"))),
                std::move(audit),
                j.value("seed", std::uint64_t{0}),
                j.value("attempts", std::size_t{0})};
  return w;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace msarr
