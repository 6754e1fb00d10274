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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aplab/density.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"

// Hand-rolled generators for property tests. Every case draws from its own
// mt19937_64 seeded with (base, case index), and failures print that seed.
namespace aplab::gen {

using Rng = std::mt19937_64;

inline Rng rng_for(std::uint64_t base, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

inline Group group(Rng& r, std::size_t max_order = 512) {
  static const char* pool[] = {"z:1",   "z:2",   "z:7",   "z:12",  "z:31",  "z:64",
                               "z:97",  "z:100", "z:128", "z:211", "z:243", "z:509",
                               "v:3:1", "v:3:3", "v:3:4", "v:5:2", "v:5:3", "v:7:2",
                               "v:2:5", "v:11:2"};
  for (;;) {
    Group g = make_group(pool[r() % std::size(pool)]);
    if (g.order() <= max_order) return g;
  }
}

inline Group cyclic(Rng& r, std::uint32_t lo, std::uint32_t hi) {
  return Group::cyclic(lo + static_cast<std::uint32_t>(r() % (hi - lo + 1)));
}

inline Group odd_vector_space(Rng& r) {
  static const char* pool[] = {"v:3:2", "v:3:3", "v:3:4", "v:5:2", "v:5:3", "v:7:2"};
  return make_group(pool[r() % std::size(pool)]);
}

inline double uniform(Rng& r, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(r);
}

inline GFunc function(Rng& r, const Group& g) {
  GFunc f(g, Side::kPhysical);
  for (Index x = 0; x < g.order(); ++x) f[x] = cplx(uniform(r, -1, 1), uniform(r, -1, 1));
  return f;
}

inline GFunc real_function(Rng& r, const Group& g) {
  GFunc f(g, Side::kPhysical);
  for (Index x = 0; x < g.order(); ++x) f[x] = uniform(r, -1, 1);
  return f;
}

inline SubsetG subset(Rng& r, const Group& g, double alpha) {
  std::vector<Index> m;
  for (Index x = 0; x < g.order(); ++x) {
    if (uniform(r) < alpha) m.push_back(x);
  }
  if (m.empty()) m.push_back(static_cast<Index>(r() % g.order()));
  return SubsetG(g, std::move(m));
}

inline SubsetG subset(Rng& r, const Group& g) { return subset(r, g, uniform(r, 0.02, 0.7)); }

inline Index element(Rng& r, const Group& g) { return static_cast<Index>(r() % g.order()); }

}  // namespace aplab::gen

// Runs `body(rng)` for `cases` generated cases, labelling failures.
#define APLAB_FOR_ALL(cases, base, rng_name)                                  \
  for (int aplab_case_ = 0; aplab_case_ < (cases); ++aplab_case_)             \
    if (auto rng_name = ::aplab::gen::rng_for((base), aplab_case_); false) {  \
    } else if (SCOPED_TRACE("case " + std::to_string(aplab_case_)); false) { \
    } else
