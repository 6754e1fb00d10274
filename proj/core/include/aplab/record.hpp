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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aplab {

struct BootstrapResult;
struct IncrementTrace;

/// One line of the experiment record stream.
struct Record {
  int step = 0;
  std::string kind;
  std::size_t codim_or_rank = 0;
  int k_used = 0;
  double alpha = 0.0;
  double witness = 0.0;
  std::optional<double> bound_ratio;  // null when not applicable
  std::uint64_t seed = 0;
};

/// Single-line JSON object with the fields in declaration order.
std::string to_json_line(const Record& r);
Record parse_record(const std::string& line);

Record bootstrap_record(int step, const std::string& kind, const BootstrapResult& r,
                        std::uint64_t seed);
std::vector<Record> trace_records(const IncrementTrace& trace, std::uint64_t seed);

}  // namespace aplab
