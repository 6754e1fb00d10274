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
#include <string>
#include <vector>

namespace aplab::cli {

// Everything a run depends on. Serialized with a fixed key order so that a
// saved config reloads and re-saves byte-identically.
struct ExperimentConfig {
  std::string command;
  std::string group = "v:3:5";
  double eps = 0.05;
  int p = 2;
  std::int64_t k = 1;
  std::uint64_t seed = 20240601;
  int instances = 1;
  std::string strategy = "random-translate";
  int max_steps = -1;  // -1: use the step bound
  int codim0 = 2;
  double noise = 0.0;
  int rank = 1;
  std::string ambient = "ffq";
  int trials = 64;
  std::string fixture = "planted";
  double alpha = 0.075;
  std::vector<std::int64_t> freqs;
  double width = 1.0;
  double shrink = 1.0;
  bool regular = false;
  std::uint32_t n = 100;
  std::string input;
  std::string a;
  std::string a1;
  std::string a2;
  std::string s;
  std::string c;
  std::string suite;
  std::string output;
};

std::string to_json(const ExperimentConfig& c);

/// Unknown keys and type mismatches throw Error(kFormat).
ExperimentConfig from_json(const std::string& text);

ExperimentConfig load_config(const std::string& path);
void save_config(const std::string& path, const ExperimentConfig& c);

}  // namespace aplab::cli
