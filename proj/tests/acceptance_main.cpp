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

#include <cstdio>
#include <cstdlib>
#include <string>

#include "verify/suites.hpp"

// One line per acceptance criterion; exit status 0 iff all pass.
int main(int argc, char** argv) {
  aplab::verify::SuiteOptions o;
  if (argc > 1) o.seed = std::strtoull(argv[1], nullptr, 10);
  using Fn = aplab::verify::CriterionResult (*)(const aplab::verify::SuiteOptions&);
  const Fn criteria[] = {
      &aplab::verify::harmonic_identities, &aplab::verify::counting,
      &aplab::verify::key_cancellation,    &aplab::verify::lemma_ffq,
      &aplab::verify::lemma_bohr,          &aplab::verify::dichotomy,
      &aplab::verify::iteration,           &aplab::verify::bohr_suite,
      &aplab::verify::determinism,
  };
  int failed = 0;
  for (Fn fn : criteria) {
    const auto r = fn(o);
    std::printf("%s\n", aplab::verify::format_line(r).c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/9 criteria pass\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
