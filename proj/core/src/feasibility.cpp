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

#include "msarr/feasibility.hpp"

#include <atomic>

namespace msarr {

namespace {
std::atomic<std::uint64_t> g_lp_solves{0};
}  // namespace

std::uint64_t lp_solve_count() { return g_lp_solves.load(); }
void reset_lp_solve_count() { g_lp_solves.store(0); }

namespace detail {
void count_lp_solve() { g_lp_solves.fetch_add(1, std::memory_order_relaxed); }
}  // namespace detail

}  // namespace msarr
