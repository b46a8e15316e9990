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

// Finite families of subsets of [n], kept in a canonical order.

#ifndef MSARR_SETFAMILY_HPP_
#define MSARR_SETFAMILY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "msarr/matroid.hpp"

namespace msarr {

// Lexicographic order of the sorted element lists.
bool tuple_less(Mask a, Mask b);

// Members are subsets of [n] stored as masks (bit i is element i+1) and
// sorted by tuple order without duplicates. The antichain condition is not
// enforced here so that membership tests can report it.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t n, std::size_t k, std::vector<Mask> members);
  // 1-based element lists.
  static SetFamily from_lists(std::size_t n, std::size_t k,
                              const std::vector<std::vector<std::size_t>>& lists);
  // Shorthand such as "1245,1346,2356" for n <= 9.
  static SetFamily parse(std::size_t n, std::size_t k, const std::string& text);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Mask union_mask() const;
  bool is_antichain() const;
  std::vector<std::vector<std::size_t>> lists() const;
  std::string str() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
  friend bool operator<(const SetFamily& a, const SetFamily& b);

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Mask> members_;
};

}  // namespace msarr

#endif  // MSARR_SETFAMILY_HPP_
