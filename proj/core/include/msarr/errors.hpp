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

#ifndef MSARR_ERRORS_HPP_
#define MSARR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace msarr {

// Enumeration would exceed the configured size ceiling.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A seeded sampling loop ran out of attempts.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verified mathematical statement failed on a concrete instance.
class ContradictionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msarr

#endif  // MSARR_ERRORS_HPP_
