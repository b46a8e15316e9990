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

#include "msarr/commands.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <variant>

#include "msarr/errors.hpp"
#include "msarr/feasibility.hpp"
#include "msarr/msbuild.hpp"
#include "msarr/nonvgen.hpp"
#include "msarr/pnk.hpp"
#include "msarr/sigma.hpp"

namespace msarr::cli {

namespace {

using RatArr = CentralArrangement<Rational>;
using RootArr = CentralArrangement<QSqrt5>;
using AnyArrangement = std::variant<RatArr, RootArr>;

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing --") + flag);
  return *v;
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

void require_size(std::size_t hyperplanes, std::size_t limit, const std::string& what) {
  if (hyperplanes > limit) {
    throw GuardExceeded(what + ": " + std::to_string(hyperplanes) +
                        " hyperplanes exceed the limit of " + std::to_string(limit));
  }
}

GenericArrangement<Rational> base_from_file(const std::string& path) {
  const json j = read_json_file(path);
  return GenericArrangement<Rational>(
      matrix_from_json<Rational>(j.is_object() ? j.at("matrix") : j));
}

MSArrangement<Rational> rational_ms(const RunConfig& c) {
  if (!c.base_path.empty()) return build_ms(base_from_file(c.base_path));
  if (!c.example.empty()) return build_ms(rational_example_base(c.example));
  return random_very_generic(need(c.n, "n"), need(c.k, "k"), c.seed);
}

AnyArrangement load_arrangement(const RunConfig& c) {
  if (!c.arrangement_path.empty()) {
    const json j = read_json_file(c.arrangement_path);
    const std::string field = arrangement_field(j);
    if (field == FieldTraits<Rational>::name) return arrangement_from_json<Rational>(j);
    if (field == FieldTraits<QSqrt5>::name) return arrangement_from_json<QSqrt5>(j);
    throw std::invalid_argument("unknown field '" + field + "'");
  }
  if (c.example == "h3") return build_ms(h3_base()).arrangement;
  if (c.example.empty() && !c.base_path.empty()) return build_ms(base_from_file(c.base_path)).arrangement;
  if (c.example.empty() && !(c.n && c.k)) {
    throw std::invalid_argument("give --arrangement, --example, --base or --n/--k");
  }
  return rational_ms(c).arrangement;
}

template <OrderedField F>
json checked_certificate(const CentralArrangement<F>& a, const SignVector& eps,
                         const GordanCertificate<F>& cert) {
  if (!verify_gordan(a, eps, cert)) throw std::logic_error("certificate failed re-verification");
  return to_json(a, cert);
}

template <OrderedField F>
json jump_json(const CentralArrangement<F>& a, const JumpWitness<F>& w, std::size_t p) {
  json out = to_json(a, w);
  out["certificate"] = checked_certificate(a, w.eps, w.certificate);
  out["p"] = p;
  return out;
}

json labels_json(const std::vector<std::string>& labels) { return json(labels); }

// --- verify-clean-52 helpers ----------------------------------------------

Mask permute_subset(Mask s, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (auto e : mask_elements(s)) out |= bit(perm[e]);
  return out;
}

std::vector<Mask> orbit_key(const std::vector<Mask>& support, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> img;
    for (Mask s : support) img.push_back(permute_subset(s, perm));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t orbit_size(const std::vector<Mask>& support, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<Mask>> seen;
  do {
    std::vector<Mask> img;
    for (Mask s : support) img.push_back(permute_subset(s, perm));
    std::sort(img.begin(), img.end());
    seen.insert(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

std::vector<Mask> parse_support(const std::vector<std::string>& labels) {
  std::vector<Mask> out;
  for (const auto& l : labels) {
    Mask m = 0;
    for (char ch : l) m |= bit(static_cast<std::size_t>(ch - '1'));
    out.push_back(m);
  }
  return out;
}

json orbit_classification(const MSArrangement<Rational>& ms) {
  const std::size_t n = ms.n();
  std::map<std::vector<Mask>, std::vector<std::vector<Mask>>> classes;
  for (const auto& circ : circuits(ms.arrangement, 4)) {
    if (circ.support.size() != 4) continue;
    std::vector<Mask> s;
    for (auto h : circ.support) s.push_back(ms.subsets[h]);
    std::sort(s.begin(), s.end());
    classes[orbit_key(s, n)].push_back(std::move(s));
  }
  const std::vector<std::vector<std::string>> expected_reps{
      {"123", "124", "135", "245"}, {"123", "124", "125", "345"}, {"123", "124", "135", "145"}};
  std::set<std::vector<Mask>> expected;
  for (const auto& r : expected_reps) expected.insert(orbit_key(parse_support(r), n));
  json orbits = json::array();
  bool closed = true, matches = classes.size() == expected.size();
  std::size_t total = 0;
  for (const auto& [key, members] : classes) {
    json ls = json::array();
    for (Mask s : key) ls.push_back(subset_label(s, n));
    const std::size_t full = orbit_size(key, n);
    if (full != members.size()) closed = false;
    if (!expected.count(key)) matches = false;
    total += members.size();
    orbits.push_back({{"representative", ls}, {"size", members.size()}, {"orbit_size", full}});
  }
  return {{"supports", total},
          {"orbit_count", classes.size()},
          {"orbits", orbits},
          {"orbits_closed", closed},
          {"matches_expected", matches}};
}

// --- main theorem pipelines ----------------------------------------------

json equality_pipeline(const RunConfig& c, std::size_t n, std::size_t k, std::size_t p) {
  const auto ms = rational_ms(c);
  const auto vg = is_very_generic(ms);
  if (!vg.very_generic) throw ContradictionError("base is not very generic");
  const auto& a = ms.arrangement;
  const auto lower = SigmaEngine<Rational>(a, p, c.max_hyperplanes).enumerate(c.max_hyperplanes);
  const auto upper = SigmaEngine<Rational>(a, p + 1, c.max_hyperplanes).enumerate(c.max_hyperplanes);
  json out = {{"mode", "equality"},
              {"base", to_json(ms.base.matrix())},
              {"sigma_p", lower.size()},
              {"sigma_p_plus_1", upper.size()},
              {"equal", lower == upper}};
  if (lower != upper) {
    std::vector<Mask> diff;
    std::set_difference(lower.begin(), lower.end(), upper.begin(), upper.end(),
                        std::back_inserter(diff));
    throw ContradictionError("Sigma_" + std::to_string(p) + " and Sigma_" + std::to_string(p + 1) +
                             " of B(" + std::to_string(n) + "," + std::to_string(k) + ") differ at " +
                             SignVector::from_mask(diff.front(), a.size()).str());
  }
  return out;
}

WitnessSpec make_witness(std::size_t n, std::size_t k, std::uint64_t seed) {
  return n - k == 3 ? witness_rank3(n, k, seed) : witness_rank_r(n, k, seed);
}

json witness_route(const RunConfig& c, const WitnessSpec& w, std::size_t p) {
  json stages = json::array();
  stages.push_back({{"stage", "witness"}, {"construction", w.construction}, {"verified", w.verified()},
                    {"attempts", w.attempts}});
  if (!w.verified()) throw ContradictionError("witness audit failed");
  const auto pr = perturb_to_very_generic(w, c.denom, c.seed);
  stages.push_back({{"stage", "perturb"}, {"attempts", pr.attempts}, {"very_generic", true}});
  const auto& a = pr.ms.arrangement;
  const auto ess = essentialize(a).arrangement;
  const Mask preferred = pr.ms.subsets_mask(pr.coincident);
  const auto pick = pick_simple_chamber(ess, preferred, c.max_hyperplanes);
  json out = {{"witness", to_json(w)}, {"perturbed_base", to_json(pr.ms.base.matrix())}};
  std::optional<JumpWitness<Rational>> jump;
  if (pick) {
    const SignVector chamber = SignVector::from_mask(pick->chamber, a.size());
    const SignVector eps = chamber.flipped(pick->walls);
    stages.push_back({{"stage", "simple-chamber"},
                      {"chamber", chamber.str()},
                      {"walls", labels_json(labels_of(a, mask_elements(pick->walls)))},
                      {"walls_match_coincident", pick->walls_match},
                      {"simple_chambers", pick->simple_count}});
    jump = detail::confirm_jump(ess, eps, p);
    if (jump) {
      jump->source = "epsilon-C";
      jump->simple_chamber = pick->chamber;
    }
  } else {
    stages.push_back({{"stage", "simple-chamber"}, {"simple_chambers", 0}});
  }
  if (!jump) {
    stages.push_back({{"stage", "fallback"}, {"search", "find_jump"}});
    JumpSearchOptions opt;
    opt.guard = c.max_hyperplanes;
    jump = find_jump(ess, p, opt);
  }
  if (!jump) throw ContradictionError("no jump found after perturbation");
  // Certificates re-verify on the original, non-essentialized normals.
  out["jump"] = jump_json(a, *jump, p);
  out["stages"] = stages;
  return out;
}

json random_base_route(const RunConfig& c, std::size_t n, std::size_t k, std::size_t p) {
  const auto ms = random_very_generic(n, k, c.seed);
  const auto ess = essentialize(ms.arrangement).arrangement;
  JumpSearchOptions opt;
  opt.guard = c.max_hyperplanes;
  auto jump = find_jump(ess, p, opt);
  json out = {{"base", to_json(ms.base.matrix())}};
  if (!jump) throw ContradictionError("random very generic base has no jump");
  out["jump"] = jump_json(ms.arrangement, *jump, p);
  return out;
}

}  // namespace

json cmd_build(const RunConfig& c) {
  if (c.example == "h3") return to_json(build_ms(h3_base()));
  return to_json(rational_ms(c));
}

json cmd_lattice(const RunConfig& c) {
  return std::visit(
      [&](const auto& a) {
        json out = lattice_json(a, a.lattice());
        out["hyperplanes"] = a.size();
        out["rank"] = a.rank();
        return out;
      },
      load_arrangement(c));
}

json cmd_sigma(const RunConfig& c) {
  if (c.eps.empty()) throw std::invalid_argument("missing --eps");
  const std::size_t p = need(c.p, "p");
  return std::visit(
      [&](const auto& a) {
        const SignVector eps = SignVector::parse(c.eps);
        auto rep = in_sigma_p(a, eps, p, true);
        for (const auto& [m, pt] : rep.witness_points)
          if (!verify_interior_point(a, eps, mask_elements(m), pt))
            throw std::logic_error("interior point failed re-verification");
        if (rep.certificate) checked_certificate(a, eps, *rep.certificate);
        json out = to_json(a, rep);
        out["p"] = p;
        out["lp_solves"] = lp_solve_count();
        return out;
      },
      load_arrangement(c));
}

json cmd_sigma_scan(const RunConfig& c) {
  const std::size_t p = need(c.p, "p");
  return std::visit(
      [&](const auto& a) {
        using F = typename std::decay_t<decltype(a)>::Field;
        require_size(a.size(), c.max_hyperplanes, "sigma-scan");
        const auto lower = SigmaEngine<F>(a, p, c.max_hyperplanes).enumerate(c.max_hyperplanes);
        const auto upper = SigmaEngine<F>(a, p + 1, c.max_hyperplanes).enumerate(c.max_hyperplanes);
        std::vector<Mask> diff;
        std::set_difference(lower.begin(), lower.end(), upper.begin(), upper.end(),
                            std::back_inserter(diff));
        json jumps = json::array();
        for (std::size_t i = 0; i < diff.size(); ++i) {
          const SignVector eps = SignVector::from_mask(diff[i], a.size());
          json entry = {{"sign_vector", eps.str()}};
          if (i < c.max_witnesses) {
            auto w = detail::confirm_jump(a, eps, p);
            if (!w) throw std::logic_error("Sigma engine disagrees with direct consistency checks");
            entry = jump_json(a, *w, p);
          }
          jumps.push_back(std::move(entry));
        }
        return json{{"p", p},
                    {"hyperplanes", a.size()},
                    {"rank", a.rank()},
                    {"sigma_p", lower.size()},
                    {"sigma_p_plus_1", upper.size()},
                    {"jump_count", diff.size()},
                    {"jumps", jumps},
                    {"lp_solves", lp_solve_count()}};
      },
      load_arrangement(c));
}

json cmd_verify_clean_52(const RunConfig& c) {
  const std::string name = c.example.empty() ? "moment:1,2,3,4,5" : c.example;
  const auto ms = build_ms(rational_example_base(name));
  if (ms.n() != 5 || ms.k() != 2) throw std::invalid_argument("verify-clean-52 needs a 2 x 5 base");
  const auto& a = ms.arrangement;
  const auto s2 = SigmaEngine<Rational>(a, 2).enumerate();
  const auto s3 = SigmaEngine<Rational>(a, 3).enumerate();
  const std::uint64_t zas = zaslavsky_chambers(a);
  json out = {{"base", name},
              {"hyperplanes", a.size()},
              {"sigma_2", s2.size()},
              {"sigma_3", s3.size()},
              {"zaslavsky_chambers", zas},
              {"equal", s2 == s3}};
  json orbits = orbit_classification(ms);
  out["circuit_orbits"] = orbits;
  out["lp_solves"] = lp_solve_count();
  if (s2 != s3) throw ContradictionError("B(5,2) is not clean: |Sigma_2| != |Sigma_3|");
  if (s3.size() != zas) throw ContradictionError("chamber count disagrees with Zaslavsky");
  if (!orbits["matches_expected"].get<bool>() || !orbits["orbits_closed"].get<bool>()) {
    throw ContradictionError("size-4 circuit supports do not form the three expected orbits");
  }
  return out;
}

json cmd_main_theorem(const RunConfig& c) {
  const std::size_t n = need(c.n, "n"), k = need(c.k, "k"), p = need(c.p, "p");
  if (k < 2 || n < k + 3 || p < 2) {
    throw std::invalid_argument("main-theorem needs k >= 2, n - k >= 3, p >= 2");
  }
  const std::size_t r = n - k;
  const std::uint64_t h = binomial(n, k + 1);
  require_size(h, c.max_hyperplanes, "main-theorem B(" + std::to_string(n) + "," + std::to_string(k) + ")");
  json out = {{"n", n}, {"k", k}, {"p", p}, {"hyperplanes", h}, {"seed", c.seed}};
  if (k == 2 && p == 2) {
    out.update(equality_pipeline(c, n, k, p));
  } else if (r == 3 && k >= 3 && p == 2) {
    out["mode"] = "jump";
    out["witness_route"] = witness_route(c, make_witness(n, k, c.seed), p);
    out["random_base_route"] = random_base_route(c, n, k, p);
  } else if (r >= 4 && p == r - 1) {
    out["mode"] = "jump";
    out["witness_route"] = witness_route(c, make_witness(n, k, c.seed), p);
  } else {
    throw std::invalid_argument("no pipeline for (n,k,p) = (" + std::to_string(n) + "," +
                                std::to_string(k) + "," + std::to_string(p) + ")");
  }
  out["lp_solves"] = lp_solve_count();
  return out;
}

json cmd_witness(const RunConfig& c) {
  const std::size_t n = need(c.n, "n"), k = need(c.k, "k");
  if (n < k + 3) throw std::invalid_argument("witness needs n - k >= 3");
  return to_json(make_witness(n, k, c.seed));
}

json cmd_perturb(const RunConfig& c) {
  const WitnessSpec w = !c.witness_path.empty()
                            ? witness_from_json(read_json_file(c.witness_path))
                            : make_witness(need(c.n, "n"), need(c.k, "k"), c.seed);
  require_size(binomial(w.n, w.k + 1), c.max_hyperplanes, "perturb");
  const auto pr = perturb_to_very_generic(w, c.denom, c.seed);
  const auto& a = pr.ms.arrangement;
  std::vector<std::string> coincident;
  for (Mask I : pr.coincident) coincident.push_back(subset_label(I, w.n));
  json out = {{"arrangement", to_json(pr.ms)},
              {"attempts", pr.attempts},
              {"denom", c.denom},
              {"coincident", coincident}};
  const auto ess = essentialize(a).arrangement;
  if (const auto pick = pick_simple_chamber(ess, pr.ms.subsets_mask(pr.coincident), c.max_hyperplanes)) {
    const SignVector chamber = SignVector::from_mask(pick->chamber, a.size());
    out["simple_chamber"] = {{"chamber", chamber.str()},
                             {"walls", labels_of(a, mask_elements(pick->walls))},
                             {"walls_match_coincident", pick->walls_match},
                             {"simple_chambers", pick->simple_count},
                             {"epsilon_C", chamber.flipped(pick->walls).str()}};
  }
  return out;
}

json cmd_pnk(const RunConfig& c) {
  const std::size_t n = need(c.n, "n"), k = need(c.k, "k");
  json out = {{"n", n}, {"k", k}};
  if (!c.family.empty()) {
    const SetFamily f = SetFamily::parse(n, k, c.family);
    const PnkCheck chk = is_pnk_element(f);
    json wit = json::array();
    for (Mask t : chk.witness) wit.push_back(subset_label(t, n));
    out["family"] = f.str();
    out["member"] = chk.member;
    if (!chk.member) {
      out["condition"] = chk.condition;
      out["witness"] = wit;
    } else {
      out["rank"] = pnk_rank(f);
    }
    return out;
  }
  const std::size_t max_rank = c.max_rank.value_or(n - k);
  const auto levels = enumerate_pnk(n, k, max_rank);
  std::vector<std::size_t> counts;
  for (const auto& l : levels) counts.push_back(l.size());
  out["counts"] = counts;
  if (!c.example.empty() || !c.base_path.empty()) {
    RunConfig rc = c;
    const auto ms = rational_ms(rc);
    const auto cmp = lattice_isomorphic_to_pnk(ms);
    out["lattice_counts"] = ms.arrangement.lattice().counts();
    out["isomorphic"] = cmp.isomorphic;
    if (!cmp.isomorphic) {
      out["reason"] = cmp.reason;
      out["counterexample"] = cmp.counterexample->str();
      json all = json::array();
      for (const auto& t : cmp.counterexamples) all.push_back(t.str());
      out["counterexamples"] = all;
    }
  }
  return out;
}

json run_command(const std::string& name, const RunConfig& c) {
  reset_lp_solve_count();
  if (name == "build") return cmd_build(c);
  if (name == "lattice") return cmd_lattice(c);
  if (name == "sigma") return cmd_sigma(c);
  if (name == "sigma-scan") return cmd_sigma_scan(c);
  if (name == "verify-clean-52") return cmd_verify_clean_52(c);
  if (name == "main-theorem") return cmd_main_theorem(c);
  if (name == "witness") return cmd_witness(c);
  if (name == "perturb") return cmd_perturb(c);
  if (name == "pnk") return cmd_pnk(c);
  throw std::invalid_argument("unknown command '" + name + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ContradictionError*>(&e)) return kContradiction;
  if (dynamic_cast<const GuardExceeded*>(&e)) return kGuard;
  if (dynamic_cast<const RetryExhausted*>(&e)) return kRetry;
  return kFailure;
}

}  // namespace msarr::cli
