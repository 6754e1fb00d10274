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

#include "aplab/error.hpp"

#include <cstdio>

namespace aplab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kUnsupportedKind: return "unsupported-kind";
    case ErrorKind::kGroupMismatch: return "group-mismatch";
    case ErrorKind::kInvalidDilate: return "invalid-dilate";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kContract: return "contract";
    case ErrorKind::kEmptySet: return "empty-set";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kPrecision: return "precision";
    case ErrorKind::kGenerationFailure: return "generation-failure";
    case ErrorKind::kSearchFailure: return "search-failure";
    case ErrorKind::kSiftFailure: return "sift-failure";
    case ErrorKind::kBootstrapFailure: return "bootstrap-failure";
    case ErrorKind::kInternalAssertion: return "internal-assertion";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(std::string_view quantity, double value,
                       std::string_view op, double bound) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.*s = %.17g violates %.*s %.17g",
                static_cast<int>(quantity.size()), quantity.data(), value,
                static_cast<int>(op.size()), op.data(), bound);
  throw Error(ErrorKind::kInternalAssertion, buf);
}

}  // namespace

void require_at_least(std::string_view quantity, double value, double bound,
                      double slack) {
  if (!(value >= bound - slack)) fail(quantity, value, ">=", bound);
}

void require_at_most(std::string_view quantity, double value, double bound,
                     double slack) {
  if (!(value <= bound + slack)) fail(quantity, value, "<=", bound);
}

}  // namespace aplab
