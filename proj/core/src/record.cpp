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

#include "aplab/record.hpp"

#include <nlohmann/json.hpp>

#include "aplab/error.hpp"
#include "aplab/increment.hpp"

namespace aplab {

std::string to_json_line(const Record& r) {
  nlohmann::ordered_json j;
  j["step"] = r.step;
  j["kind"] = r.kind;
  j["codim_or_rank"] = r.codim_or_rank;
  j["k_used"] = r.k_used;
  j["alpha"] = r.alpha;
  j["witness"] = r.witness;
  if (r.bound_ratio) {
    j["bound_ratio"] = *r.bound_ratio;
  } else {
    j["bound_ratio"] = nullptr;
  }
  j["seed"] = r.seed;
  return j.dump();
}

Record parse_record(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    if (!j.is_object() || j.size() != 8) {
      throw Error(ErrorKind::kFormat, "record must have exactly 8 fields");
    }
    Record r;
    r.step = j.at("step").get<int>();
    r.kind = j.at("kind").get<std::string>();
    r.codim_or_rank = j.at("codim_or_rank").get<std::size_t>();
    r.k_used = j.at("k_used").get<int>();
    r.alpha = j.at("alpha").get<double>();
    r.witness = j.at("witness").get<double>();
    if (!j.at("bound_ratio").is_null()) r.bound_ratio = j.at("bound_ratio").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("bad record: ") + e.what());
  }
}

Record bootstrap_record(int step, const std::string& kind, const BootstrapResult& r,
                        std::uint64_t seed) {
  return Record{step,      kind,          r.codim_or_rank, r.k_used, r.alpha,
                r.witness_sup, r.bound.ratio, seed};
}

std::vector<Record> trace_records(const IncrementTrace& trace, std::uint64_t seed) {
  std::vector<Record> out;
  out.reserve(trace.steps.size());
  for (const auto& s : trace.steps) {
    out.push_back(Record{s.step, s.kind, s.codim, s.k_used, s.alpha, s.witness,
                         s.bound_ratio, seed});
  }
  return out;
}

}  // namespace aplab
