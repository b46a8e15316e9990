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

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "msarr/commands.hpp"

namespace {

struct Command {
  const char* name;
  const char* help;
};

constexpr Command kCommands[] = {
    {"build", "Build a Manin-Schechtman arrangement from a base or named example"},
    {"lattice", "Intersection lattice of an arrangement"},
    {"sigma", "Test one sign vector for membership in Sigma_p"},
    {"sigma-scan", "Enumerate Sigma_p and Sigma_{p+1} and list the difference"},
    {"verify-clean-52", "Exhaustive cleanliness check of B(5,2) and circuit orbits"},
    {"main-theorem", "Run the jump or equality pipeline for (n,k,p)"},
    {"witness", "Construct a generic, non-very-generic witness base"},
    {"perturb", "Perturb a witness base to a very generic one"},
    {"pnk", "Enumerate P(n,k) or test a set family"},
};

}  // namespace

int main(int argc, char** argv) {
  using msarr::cli::RunConfig;
  CLI::App app{"Exact computations on Manin-Schechtman arrangements"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string out_path;
  bool timing = false;
  std::size_t n = 0, k = 0, p = 0, max_rank = 0;

  for (const auto& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--example", cfg.example, "Named example: ms-3.1, falk, h3, b63, moment:s1,..,sn");
    sub->add_option("--base", cfg.base_path, "JSON file with a k x n base matrix");
    sub->add_option("--arrangement", cfg.arrangement_path, "Arrangement JSON file");
    sub->add_option("--witness", cfg.witness_path, "Witness JSON file");
    sub->add_option("--eps", cfg.eps, "Sign vector such as ++-+");
    sub->add_option("--family", cfg.family, "Set family such as 1245,1346,2356");
    sub->add_option("--n", n, "Number of base hyperplanes");
    sub->add_option("--k", k, "Rank of the base");
    sub->add_option("--p", p, "Filtration level");
    sub->add_option("--max-rank", max_rank, "Largest P(n,k) rank to enumerate");
    sub->add_option("--seed", cfg.seed, "Seed for all randomized steps");
    sub->add_option("--denom", cfg.denom, "Perturbation denominator");
    sub->add_option("--max-hyperplanes", cfg.max_hyperplanes, "Enumeration ceiling")
        ->check(CLI::Range(std::size_t{1}, msarr::kMaxHyperplanes));
    sub->add_option("--max-witnesses", cfg.max_witnesses, "Certificates listed by sigma-scan");
    sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
    sub->add_flag("--timing", timing, "Include wall-clock seconds in the report");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--n")) cfg.n = n;
  if (sub->count("--k")) cfg.k = k;
  if (sub->count("--p")) cfg.p = p;
  if (sub->count("--max-rank")) cfg.max_rank = max_rank;

  const auto start = std::chrono::steady_clock::now();
  try {
    msarr::json report = msarr::cli::run_command(name, cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (timing) report["wall_clock_s"] = secs;
    std::cerr << name << ": " << secs << " s\n";
    if (out_path.empty()) {
      std::cout << report.dump(2) << '\n';
    } else {
      msarr::write_json_file(out_path, report);
    }
    return msarr::cli::kOk;
  } catch (const std::exception& e) {
    std::cerr << "msarr " << name << ": " << e.what() << '\n';
    return msarr::cli::exit_code_for(e);
  }
}
