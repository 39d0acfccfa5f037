// Copyright 2026 The czcp Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace czcp {

// Raised when an operation is called outside its domain (bad length,
// mismatched alphabet, malformed text). The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction whose stated precondition does not hold. `tau` carries the
// first violating shift when the precondition is a correlation identity.
class PreconditionError : public UsageError {
 public:
  PreconditionError(const std::string& what, long tau)
      : UsageError(what), tau_(tau) {}

  long tau() const noexcept { return tau_; }

 private:
  long tau_;
};

// X^H X is singular, so the least-squares estimate is not defined.
class RankDeficientError : public std::runtime_error {
 public:
  explicit RankDeficientError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace czcp
