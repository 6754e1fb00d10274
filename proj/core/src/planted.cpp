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

#include <algorithm>
#include <cmath>
#include <string>

#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/increment.hpp"
#include "aplab/rng.hpp"

namespace aplab {
namespace {

constexpr int kMaxAttempts = 100;
constexpr std::uint64_t kSubspaceStream = 0x9a7e;
constexpr std::uint64_t kBohrStream = 0xb0b2;

SubsetG threshold_set(const GFunc& corr, double scale, double threshold,
                      const SubsetG* restrict_to) {
  const Group& g = corr.group();
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    if (restrict_to && !restrict_to->contains(x)) continue;
    if (corr[x].real() * scale >= threshold) out.push_back(x);
  }
  return SubsetG(g, std::move(out));
}

// `count` distinct points of `pool` outside `avoid`, drawn by rejection.
std::vector<Index> draw_points(CounterRng& rng, std::span<const Index> pool,
                               const SubsetG& avoid, std::size_t count) {
  std::vector<Index> free;
  for (Index x : pool) {
    if (!avoid.contains(x)) free.push_back(x);
  }
  count = std::min(count, free.size());
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(free.size() - i);
    std::swap(free[i], free[j]);
  }
  free.resize(count);
  return free;
}

}  // namespace

PlantedInstance planted_instance(const Group& group, std::size_t codim0, double noise,
                                 double eps, std::uint64_t seed) {
  if (!group.is_vector_space()) {
    throw Error(ErrorKind::kUnsupportedKind, "planted_instance needs F_q^n");
  }
  if (codim0 < 1 || codim0 > group.n()) {
    throw Error(ErrorKind::kDomain, "codim0 must lie in [1, n]");
  }
  if (!(noise >= 0.0 && noise < 1.0)) throw Error(ErrorKind::kDomain, "noise must lie in [0, 1)");
  if (!(eps > 0.0 && eps < 0.125)) throw Error(ErrorKind::kDomain, "eps must lie in (0, 1/8)");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    CounterRng rng(s, kSubspaceStream);
    std::vector<Index> constraints;
    while (constraints.size() < codim0) {
      const auto v = static_cast<Index>(rng.below(group.order()));
      constraints.push_back(v);
      if (span_dim(group, constraints) < constraints.size()) constraints.pop_back();
    }
    const Subspace v0 = Subspace::annihilator(group, constraints);
    const SubsetG v0_set(group, v0.elements());
    std::vector<Index> all(group.order());
    for (Index x = 0; x < group.order(); ++x) all[x] = x;
    const auto extra = static_cast<std::size_t>(std::llround(noise * v0_set.size()));
    std::vector<Index> members = draw_points(rng, all, v0_set, extra);
    members.insert(members.end(), v0_set.members().begin(), v0_set.members().end());
    SubsetG a(group, std::move(members));
    const GFunc mu_a = normalized_measure(a);
    SubsetG s_set = threshold_set(diff_convolve(mu_a, mu_a), 1.0, 1.0 + 4.0 * eps, nullptr);
    if (s_set.empty()) continue;
    const HypothesisReport r = check_hypotheses(a, v0_set, v0_set, s_set, eps, FfqAmbient{});
    if (!r.ok) continue;
    return PlantedInstance{a, v0_set, v0_set, std::move(s_set), v0_set, s};
  }
  throw Error(ErrorKind::kGenerationFailure,
              "no hypothesis-satisfying instance within 100 seeds from " + std::to_string(seed));
}

PlantedBohrInstance planted_bohr_instance(const Group& group, std::size_t rank, double noise,
                                          double eps, std::uint64_t seed) {
  if (!group.is_cyclic()) {
    throw Error(ErrorKind::kUnsupportedKind, "planted_bohr_instance needs Z/N");
  }
  if (group.order() < 8) throw Error(ErrorKind::kDomain, "group too small");
  if (!(noise >= 0.0 && noise < 1.0)) throw Error(ErrorKind::kDomain, "noise must lie in [0, 1)");
  if (!(eps > 0.0 && eps < 0.1)) throw Error(ErrorKind::kDomain, "eps must lie in (0, 1/10)");
  const auto n = static_cast<std::uint64_t>(group.order());
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    CounterRng rng(s, kBohrStream);
    std::vector<Index> freqs;
    while (freqs.size() < rank) {
      const auto r = static_cast<Index>(1 + rng.below(n - 1));
      if (std::find(freqs.begin(), freqs.end(), r) == freqs.end()) freqs.push_back(r);
    }
    const BohrSet b = rank == 0 ? BohrSet(group, {}, {}).with_regularity(Regularity::kRegular)
                                : find_regular(bohr_set(group, freqs, 1.5));
    // A is concentrated near 0 of B: half the widths of B plus one extra
    // frequency; A1 = A2 is the same set at a quarter of those widths.
    std::vector<Index> core_freqs = freqs;
    std::vector<double> core_widths = b.widths();
    for (double& w : core_widths) w *= 0.5;
    core_freqs.push_back(static_cast<Index>(1 + rng.below(n - 1)));
    core_widths.push_back(1.0);
    const BohrSet core(group, core_freqs, core_widths);
    const SubsetG core_set = core.elements();
    std::vector<double> inner_widths = core_widths;
    for (double& w : inner_widths) w *= 0.25;
    const SubsetG a1 = BohrSet(group, core_freqs, inner_widths).elements();

    const auto extra = static_cast<std::size_t>(std::llround(noise * core_set.size()));
    std::vector<Index> members = draw_points(rng, b.elements().members(), core_set, extra);
    members.insert(members.end(), core_set.members().begin(), core_set.members().end());
    SubsetG a(group, std::move(members));

    const GFunc mu_a = normalized_measure(a);
    const GFunc corr = diff_convolve(mu_a, mu_a);
    std::vector<Index> diffs;
    for (Index x : a1.members()) {
      for (Index y : a1.members()) diffs.push_back(group.sub(x, y));
    }
    const SubsetG diff_set(group, std::move(diffs));
    SubsetG s_set = threshold_set(corr, b.density(), 1.0 + 2.0 * eps, &diff_set);
    if (s_set.empty()) continue;
    const HypothesisReport r =
        check_hypotheses(a, a1, a1, s_set, eps, BohrAmbient{&b, &b, &b, 0});
    if (!r.ok) continue;
    return PlantedBohrInstance{a, a1, a1, std::move(s_set), b, b, b, 0, s};
  }
  throw Error(ErrorKind::kGenerationFailure,
              "no hypothesis-satisfying Bohr instance within 100 seeds from " +
                  std::to_string(seed));
}

}  // namespace aplab
