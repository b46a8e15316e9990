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

// Command implementations behind the msarr executable. Each command returns
// a JSON report; failures surface as the library's exception types and are
// mapped to exit codes by exit_code_for.

#ifndef MSARR_TOOLS_COMMANDS_HPP_
#define MSARR_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include "msarr/io.hpp"

namespace msarr::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kContradiction = 2,
  kGuard = 3,
  kRetry = 4,
};

struct RunConfig {
  std::string example;
  std::string base_path;
  std::string arrangement_path;
  std::string witness_path;
  std::string eps;
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> p;
  std::optional<std::size_t> max_rank;
  std::uint64_t seed = 1;
  std::uint64_t denom = 1000000;
  std::size_t max_hyperplanes = kChamberGuard;
  std::size_t max_witnesses = 10;
};

json cmd_build(const RunConfig& c);
json cmd_lattice(const RunConfig& c);
json cmd_sigma(const RunConfig& c);
json cmd_sigma_scan(const RunConfig& c);
json cmd_verify_clean_52(const RunConfig& c);
json cmd_main_theorem(const RunConfig& c);
json cmd_witness(const RunConfig& c);
json cmd_perturb(const RunConfig& c);
json cmd_pnk(const RunConfig& c);

// Dispatches by subcommand name; unknown names throw std::invalid_argument.
json run_command(const std::string& name, const RunConfig& c);

int exit_code_for(const std::exception& e);

}  // namespace msarr::cli

#endif  // MSARR_TOOLS_COMMANDS_HPP_
