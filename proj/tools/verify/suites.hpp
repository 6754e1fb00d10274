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
#include <functional>
#include <string>
#include <vector>

namespace aplab::verify {

struct CriterionResult {
  std::string id;       // "C1" ... "C9", or a module check name
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;   // measured quantities, one line
  std::vector<std::string> records;  // JSON record lines, when the check emits any
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
};

CriterionResult harmonic_identities(const SuiteOptions& o);   // C1
CriterionResult counting(const SuiteOptions& o);              // C2
CriterionResult key_cancellation(const SuiteOptions& o);      // C3
CriterionResult lemma_ffq(const SuiteOptions& o);             // C4
CriterionResult lemma_bohr(const SuiteOptions& o);            // C5
CriterionResult dichotomy(const SuiteOptions& o);             // C6
CriterionResult iteration(const SuiteOptions& o);             // C7
CriterionResult bohr_suite(const SuiteOptions& o);            // C8
CriterionResult determinism(const SuiteOptions& o);           // C9
CriterionResult group_invariants(const SuiteOptions& o);

/// Suite names: harmonic, density, increment, bohr, grp, determinism, all.
bool is_suite(const std::string& name);
std::vector<std::string> suite_names();

/// Runs the checks of a suite, calling `report` after each one.
std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& o,
                                       const std::function<void(const CriterionResult&)>& report);

/// `[PASS] C4  title  (1.23 s)  detail`.
std::string format_line(const CriterionResult& r);

}  // namespace aplab::verify
