// Copyright 2026 The aplab Authors.
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
#include <string_view>

namespace aplab {

enum class ErrorKind {
  kInvalidArgument,
  kSizeLimit,
  kUnsupportedKind,
  kGroupMismatch,
  kInvalidDilate,
  kDomain,
  kContract,
  kEmptySet,
  kFormat,
  kPrecision,
  kGenerationFailure,
  kSearchFailure,
  kSiftFailure,
  kBootstrapFailure,
  // A displayed inequality with an explicit constant failed numerically.
  kInternalAssertion,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Throws kInternalAssertion naming the quantity when `value < bound - slack`.
void require_at_least(std::string_view quantity, double value, double bound,
                      double slack = 1e-9);

// Throws kInternalAssertion naming the quantity when `value > bound + slack`.
void require_at_most(std::string_view quantity, double value, double bound,
                     double slack = 1e-9);

}  // namespace aplab
