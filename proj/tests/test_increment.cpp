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
#include <variant>
#include <vector>

#include <gtest/gtest.h>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"
#include "aplab/increment.hpp"
#include "support/gen.hpp"
#include "verify/oracles.hpp"

namespace aplab {
namespace {

SubsetG subspace_set(const Group& g, const std::vector<Index>& constraints) {
  return SubsetG(g, Subspace::annihilator(g, constraints).elements());
}

SubsetG doubled(const SubsetG& a) {
  std::vector<Index> m;
  for (Index x : a.members()) m.push_back(a.group().scale(2, x));
  return SubsetG(a.group(), std::move(m));
}

// <mu_A1 o mu_A2, 1_S> by the definition: E_x sum over pairs.
double direct_sift_inner(const SubsetG& a1, const SubsetG& a2, const SubsetG& s) {
  const Group& g = a1.group();
  std::size_t hits = 0;
  for (Index x : a1.members()) {
    for (Index y : a2.members()) hits += s.contains(g.sub(x, y)) ? 1 : 0;
  }
  return static_cast<double>(hits) / (static_cast<double>(a1.size()) * static_cast<double>(a2.size()));
}

// ---------------------------------------------------------------------------

TEST(AlmostPeriods, ConstantFunction) {
  const Group g = Group::cyclic(30);
  const SubsetG d(g, {0, 3, 7, 12});
  EXPECT_EQ(almost_period_set(GFunc::constant(g, 2.5), d, 1e-6), d);
  EXPECT_NEAR(verify_linf_ap(d, 3, GFunc::constant(g, 2.5)), 0.0, 1e-14);
}

TEST(AlmostPeriods, ExactPeriodsOfCosetUnion) {
  const Group g = Group::vector_space(3, 4);
  const SubsetG w = subspace_set(g, {1, 3});
  const SubsetG a = set_union(w, w.shifted(5));
  const GFunc mu = normalized_measure(a);
  const SubsetG s = random_set(g, 0.3, 4);
  const GFunc f0 = convolve(diff_convolve(mu, mu), indicator(s));
  const SubsetG x = almost_period_set(f0, SubsetG::full(g), 1e-9);
  EXPECT_TRUE(w.is_subset_of(x));
}

TEST(AlmostPeriods, MatchesDirectScan) {
  auto r = gen::rng_for(10, 0);
  const Group g = Group::cyclic(128);
  const GFunc f0 = convolve(normalized_measure(gen::subset(r, g, 0.3)),
                            indicator(gen::subset(r, g, 0.5)));
  const SubsetG x = almost_period_set(f0, SubsetG::full(g), 0.01);
  for (Index t = 0; t < g.order(); ++t) {
    double defect = 0.0;
    for (Index y = 0; y < g.order(); ++y) defect = std::max(defect, std::abs(f0[g.add(y, t)] - f0[y]));
    EXPECT_EQ(x.contains(t), defect <= 0.01) << t;
  }
}

TEST(AlmostPeriods, TrivialSetHasNoDefect) {
  auto r = gen::rng_for(11, 0);
  const Group g = Group::cyclic(64);
  EXPECT_NEAR(verify_linf_ap(SubsetG(g, {0}), 4, gen::real_function(r, g)), 0.0, 1e-12);
}

// ---------------------------------------------------------------------------

TEST(Hypotheses, EmptySpecialSet) {
  const Group g = Group::vector_space(3, 3);
  const SubsetG a = random_set(g, 0.5, 1);
  const HypothesisReport h = check_hypotheses(a, a, a, SubsetG(g), 0.1, FfqAmbient{});
  EXPECT_EQ(h.inner_product, 0.0);
  EXPECT_FALSE(h.ok);
}

TEST(Hypotheses, MatchesDirectSummation) {
  APLAB_FOR_ALL(20, 0x4e9, r) {
    const Group g = Group::vector_space(3, 4);
    const SubsetG a = gen::subset(r, g, 0.4), a1 = gen::subset(r, g, 0.3),
                  a2 = gen::subset(r, g, 0.3), s = gen::subset(r, g, 0.5);
    const HypothesisReport h = check_hypotheses(a, a1, a2, s, 0.1, FfqAmbient{});
    EXPECT_NEAR(h.inner_product, direct_sift_inner(a1, a2, s), 1e-9);
    const GFunc corr = oracle::direct_diff_convolve(normalized_measure(a), normalized_measure(a));
    double m = 1e300;
    for (Index x : s.members()) m = std::min(m, corr[x].real());
    EXPECT_NEAR(h.min_corr_on_s, m, 1e-9);
    EXPECT_DOUBLE_EQ(h.alpha, a.density());
  }
}

TEST(Hypotheses, EpsilonRange) {
  const Group g = Group::vector_space(3, 3);
  const SubsetG a = SubsetG::full(g);
  EXPECT_THROW(check_hypotheses(a, a, a, a, 0.2, FfqAmbient{}), Error);
  EXPECT_THROW(check_hypotheses(a, a, a, a, 0.0, FfqAmbient{}), Error);
}

TEST(KFormulas, MonotoneInEpsilon) {
  for (double alpha : {0.01, 0.1, 0.5}) {
    int prev_f = 1 << 30, prev_b = 1 << 30;
    for (double eps = 0.005; eps < 0.125; eps += 0.005) {
      EXPECT_LE(k_for_ffq(eps, alpha), prev_f);
      EXPECT_LE(k_for_bohr(eps, alpha), prev_b);
      prev_f = k_for_ffq(eps, alpha);
      prev_b = k_for_bohr(eps, alpha);
      EXPECT_LE(std::pow(2.0, 1 - k_for_ffq(eps, alpha)), eps * alpha / 4.0 + 1e-15);
    }
  }
  EXPECT_EQ(k_for_ffq(0.1, 1.0 / 9.0), 10);
}

// ---------------------------------------------------------------------------

TEST(BootstrapFfq, NoiseFreeWitnessIsInverseDensity) {
  const Group g = Group::vector_space(3, 5);
  const PlantedInstance inst = planted_instance(g, 2, 0.0, 0.1, 21);
  const BootstrapResult b = bootstrap_ffq(inst.a, inst.a1, inst.a2, inst.s, 0.1);
  EXPECT_NEAR(b.witness_sup, 1.0 / inst.a.density(), 1e-9);
  EXPECT_GE(b.witness_sup, 1.05);
}

TEST(BootstrapFfq, InvariantsOnNoisyInstances) {
  APLAB_FOR_ALL(10, 0xbf1, r) {
    const Group g = make_group(r() % 2 ? "v:3:5" : "v:5:4");
    const double eps = r() % 2 ? 0.05 : 0.1;
    const PlantedInstance inst = planted_instance(g, 1 + r() % 2, gen::uniform(r, 0, 0.05), eps, r());
    BootstrapOptions opts;
    opts.seed = inst.seed;
    const BootstrapResult b = bootstrap_ffq(inst.a, inst.a1, inst.a2, inst.s, eps, opts);
    const std::vector<Index> v = b.subspace->elements();
    EXPECT_GE(oracle::coset_sup(inst.a, v), 1.0 + eps / 2.0 - 1e-9);
    EXPECT_NEAR(oracle::coset_sup(inst.a, v), b.witness_sup, 1e-9);
    const SpectrumSet delta = spectrum(normalized_measure(b.x), 0.5);
    EXPECT_EQ(b.codim_or_rank, span_dim(g, delta.members));
    EXPECT_LE(b.chain.ap_defect, eps + 1e-9);
    EXPECT_LE(b.chain.max_translation_defect, eps / 2.0 + 1e-9);
    EXPECT_LE(b.chain.l1_fourier_f, 1.0 / inst.a.density() + 1e-9);
    EXPECT_GE(b.chain.inner_s, 1.0 - 2.0 * eps - 1e-9);
    EXPECT_GE(b.chain.inner_corr, 1.0 + eps - 1e-9);
    // The full-F key cancellation, recomputed independently.
    const GFunc mu = normalized_measure(inst.a);
    const GFunc f = oracle::direct_convolve(
        oracle::direct_diff_convolve(normalized_measure(inst.a1), normalized_measure(inst.a2)),
        oracle::direct_diff_convolve(mu, mu));
    EXPECT_LE(l1_fourier(f), 1.0 / inst.a.density() + 1e-9);
  }
}

TEST(BootstrapFfq, RejectsViolatedHypotheses) {
  const Group g = Group::vector_space(3, 4);
  const SubsetG a = random_set(g, 0.4, 3);
  EXPECT_THROW(bootstrap_ffq(a, a, a, SubsetG(g, {1}), 0.1), Error);
  EXPECT_THROW(bootstrap_ffq(SubsetG::full(Group::cyclic(81)), SubsetG::full(Group::cyclic(81)),
                             SubsetG::full(Group::cyclic(81)), SubsetG::full(Group::cyclic(81)), 0.1),
               Error);
}

TEST(InnerDiscrepancy, Examples) {
  const Group g = Group::vector_space(3, 4);
  const SubsetG full = SubsetG::full(g);
  EXPECT_NEAR(inner_discrepancy(full, full, full).d1, 1.0, 1e-12);
  const SubsetG v0 = subspace_set(g, {1, 3});
  EXPECT_NEAR(inner_discrepancy(v0, v0, v0).d1, 9.0, 1e-9);
}

TEST(InnerDiscrepancy, MatchesDirectSummation) {
  APLAB_FOR_ALL(10, 0x1d5, r) {
    const Group g = Group::vector_space(3, 4);
    const SubsetG a = gen::subset(r, g), a1 = gen::subset(r, g), a2 = gen::subset(r, g);
    const GFunc mu = normalized_measure(a);
    const GFunc corr = oracle::direct_diff_convolve(mu, mu);
    auto direct = [&](const SubsetG& s) {
      const GFunc m = normalized_measure(s);
      const GFunc c = oracle::direct_diff_convolve(m, m);
      cplx acc{};
      for (Index x = 0; x < g.order(); ++x) acc += c[x] * std::conj(corr[x]);
      return acc.real() / static_cast<double>(g.order());
    };
    const InnerDiscrepancy d = inner_discrepancy(a, a1, a2);
    EXPECT_NEAR(d.d1, direct(a1), 1e-9);
    EXPECT_NEAR(d.d2, direct(a2), 1e-9);
  }
}

// ---------------------------------------------------------------------------

TEST(BootstrapBohr, PlantedInstancesMeetConclusion) {
  for (std::size_t rank : {0u, 1u, 2u}) {
    const PlantedBohrInstance inst =
        planted_bohr_instance(Group::cyclic(rank == 0 ? 4093 : 2003), rank, 0.03, 0.05, 40 + rank);
    BohrAmbient amb{&inst.b, &inst.b1, &inst.b2, inst.shift};
    EXPECT_TRUE(check_hypotheses(inst.a, inst.a1, inst.a2, inst.s, 0.05, amb).ok);
    const BootstrapResult b = bootstrap_bohr(inst.a, inst.a1, inst.a2, inst.shift, inst.s, inst.b,
                                             inst.b1, inst.b2, 0.05);
    const BohrSet& b3 = *b.bohr;
    const double witness = oracle::coset_sup(inst.a, b3.elements().members()) * inst.b.density();
    EXPECT_GE(witness, 1.0 + 0.05 / 4.0 - 1e-9) << rank;
    EXPECT_TRUE(is_regular(b3).regular);
    EXPECT_TRUE(b3.elements().is_subset_of(inst.b2.elements()));
    EXPECT_LE(b.chain.l1_fourier_f, b.chain.l1_bound + 1e-9);
  }
}

TEST(BootstrapBohr, ShiftCovariance) {
  const PlantedBohrInstance inst = planted_bohr_instance(Group::cyclic(2003), 0, 0.0, 0.05, 7);
  const BootstrapResult base = bootstrap_bohr(inst.a, inst.a1, inst.a2, 0, inst.s, inst.b,
                                              inst.b1, inst.b2, 0.05);
  const Index x = 321;
  const SubsetG a2_shifted = inst.a2.shifted(inst.a.group().neg(x));
  const BootstrapResult moved = bootstrap_bohr(inst.a, inst.a1, a2_shifted, x, inst.s.shifted(x),
                                               inst.b, inst.b1, inst.b2, 0.05);
  EXPECT_NEAR(moved.witness_sup, base.witness_sup, 1e-9);
  EXPECT_EQ(moved.codim_or_rank, base.codim_or_rank);
}

TEST(BootstrapBohr, RejectsSetsOutsideAmbient) {
  const PlantedBohrInstance inst = planted_bohr_instance(Group::cyclic(2003), 1, 0.0, 0.05, 9);
  Index far = 0;
  while (inst.b.contains(far)) ++far;
  const SubsetG outside = set_union(inst.a, SubsetG(inst.a.group(), {far}));
  EXPECT_THROW(bootstrap_bohr(outside, inst.a1, inst.a2, 0, inst.s, inst.b, inst.b1, inst.b2, 0.05),
               Error);
}

// ---------------------------------------------------------------------------

TEST(Sift, PlantedBypass) {
  const PlantedInstance inst = planted_instance(Group::vector_space(3, 5), 2, 0.0, 0.1, 3);
  SiftConfig c;
  c.strategy = SiftStrategy::kPlantedBypass;
  c.planted_a1 = inst.a1;
  c.planted_a2 = inst.a2;
  const SiftResult r = sift(inst.a, inst.s, 0.1, c);
  EXPECT_NEAR(r.achieved, 1.0, 1e-12);
}

TEST(Sift, SubspaceRecoveredByTranslates) {
  const Group g = Group::vector_space(3, 4);
  const SubsetG v0 = subspace_set(g, {1, 3});
  SiftConfig c;
  c.seed = 5;
  const SiftResult r = sift(v0, v0, 0.1, c);
  EXPECT_EQ(r.a1, v0);
  EXPECT_EQ(r.a2, v0);
  EXPECT_NEAR(r.achieved, 1.0, 1e-12);
}

TEST(Sift, ExhaustiveDominatesRandomTranslate) {
  APLAB_FOR_ALL(5, 0x51f, r) {
    const Group g = Group::vector_space(3, 4);
    const SubsetG a = gen::subset(r, g, 0.4);
    const GFunc mu = normalized_measure(a);
    const GFunc corr = diff_convolve(mu, mu);
    std::vector<Index> s_members;
    for (Index x = 0; x < g.order(); ++x) {
      if (corr[x].real() >= 1.1) s_members.push_back(x);
    }
    if (s_members.empty()) continue;
    const SubsetG s(g, s_members);
    auto run = [&](SiftStrategy strategy) {
      SiftConfig c;
      c.strategy = strategy;
      c.seed = 17;
      try {
        return sift(a, s, 0.05, c);
      } catch (const SiftFailure& f) {
        return f.best();
      }
    };
    const SiftResult random = run(SiftStrategy::kRandomTranslate);
    const SiftResult exhaustive = run(SiftStrategy::kExhaustive);
    EXPECT_GE(exhaustive.achieved, random.achieved - 1e-12);
    EXPECT_NEAR(random.achieved, direct_sift_inner(random.a1, random.a2, s), 1e-9);
    EXPECT_NEAR(exhaustive.achieved, direct_sift_inner(exhaustive.a1, exhaustive.a2, s), 1e-9);
  }
}

TEST(Sift, StrategyNames) {
  EXPECT_EQ(parse_sift_strategy("exhaustive"), SiftStrategy::kExhaustive);
  EXPECT_EQ(parse_sift_strategy("random-translate"), SiftStrategy::kRandomTranslate);
  EXPECT_EQ(parse_sift_strategy("planted-bypass"), SiftStrategy::kPlantedBypass);
  EXPECT_THROW(parse_sift_strategy("magic"), Error);
}

// ---------------------------------------------------------------------------

TEST(IncrementFfq, CountsMatchOnFullGroup) {
  const SubsetG full = SubsetG::full(Group::vector_space(3, 3));
  const FfqStepResult r = increment_step_ffq(full, full, 0.1, SiftConfig{});
  ASSERT_TRUE(std::holds_alternative<CountsMatch>(r));
  EXPECT_NEAR(std::get<CountsMatch>(r).value, 1.0, 1e-12);
}

TEST(IncrementFfq, SubspaceAgainstComplement) {
  const Group g = Group::vector_space(3, 5);
  const SubsetG a = subspace_set(g, {1, 3});
  const double eps = 0.5;
  const FfqStepResult r = increment_step_ffq(a, set_complement(a), eps, SiftConfig{});
  ASSERT_TRUE(std::holds_alternative<FfqIncrement>(r));
  const auto& inc = std::get<FfqIncrement>(r);
  EXPECT_NEAR(inc.counts_value, 0.0, 1e-12);
  const double witness = oracle::coset_sup(a, inc.v.elements()) * a.density();
  EXPECT_NEAR(witness, inc.witness, 1e-12);
  EXPECT_GE(witness, (1.0 + eps / 64.0) * a.density());
  EXPECT_NEAR(witness, 1.0, 1e-12);
}

TEST(IncrementFfq, RandomSetsUsuallyMatch) {
  const Group g = Group::vector_space(3, 4);
  int matches = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    SiftConfig c;
    c.seed = s;
    matches += std::holds_alternative<CountsMatch>(
                   increment_step_ffq(random_set(g, 0.45, s), SubsetG::full(g), 0.1, c))
                   ? 1
                   : 0;
  }
  EXPECT_GE(matches, 36);
}

TEST(IncrementFfq, Preconditions) {
  const SubsetG full = SubsetG::full(Group::vector_space(3, 3));
  EXPECT_THROW(increment_step_ffq(full, full, 1.0, SiftConfig{}), Error);
  EXPECT_THROW(increment_step_ffq(full, full, 0.0, SiftConfig{}), Error);
  const SubsetG even = SubsetG::full(Group::vector_space(2, 3));
  EXPECT_THROW(increment_step_ffq(even, even, 0.1, SiftConfig{}), Error);
}

TEST(Iterate, FullGroupStopsImmediately) {
  const SubsetG full = SubsetG::full(Group::vector_space(3, 4));
  const IncrementTrace t = iterate_ffq(full, full, 0.5, 10, SiftConfig{});
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].kind, "counts-match");
  EXPECT_EQ(t.outcome, TraceOutcome::kCountsMatch);
}

TEST(Iterate, PlantedTraceIsMonotoneAndBounded) {
  APLAB_FOR_ALL(8, 0x17e, r) {
    const Group g = make_group(r() % 2 ? "v:3:5" : "v:5:4");
    const PlantedInstance inst = planted_instance(g, 2, gen::uniform(r, 0, 0.05), 0.1, r());
    const double eps = 0.5;
    const std::size_t bound = iteration_step_bound(inst.a.density(), eps);
    SiftConfig c;
    c.seed = inst.seed;
    const IncrementTrace t = iterate_ffq(inst.a, doubled(inst.a), eps, static_cast<int>(bound), c);
    EXPECT_EQ(t.outcome, TraceOutcome::kCountsMatch);
    EXPECT_LE(t.steps.size(), bound);
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
      EXPECT_GT(t.steps[i + 1].alpha, t.steps[i].alpha);
    }
  }
}

TEST(Iterate, StepBoundFormula) {
  EXPECT_EQ(iteration_step_bound(0.5, 0.64), static_cast<std::size_t>(std::ceil(std::log(2.0) / std::log(1.01))));
  EXPECT_THROW(iterate_ffq(SubsetG::full(Group::vector_space(3, 2)),
                           SubsetG::full(Group::vector_space(3, 2)), 0.5, 0, SiftConfig{}),
               Error);
}

// ---------------------------------------------------------------------------

TEST(IncrementInt, FullGroupHasNoViolation) {
  const Group g = Group::cyclic(101);
  const BohrSet b(g, {}, {});
  for (int p : {1, 2, 4}) {
    IntStepParams params;
    params.p = p;
    const IntStepResult r = increment_step_int(SubsetG::full(g), b, b, b, params, SiftConfig{});
    ASSERT_TRUE(std::holds_alternative<NoViolation>(r));
    EXPECT_NEAR(std::get<NoViolation>(r).norm, 1.0, 1e-9);
  }
}

TEST(IncrementInt, IntervalGivesIncrement) {
  const Group g = Group::cyclic(2003);
  std::vector<Index> m;
  for (Index x = 0; x < 150; ++x) m.push_back(x);
  const SubsetG a(g, m);
  const BohrSet b(g, {}, {});
  IntStepParams params;
  params.eps = 0.2;
  SiftConfig c;
  c.seed = 1;
  const IntStepResult r = increment_step_int(a, b, b, b, params, c);
  ASSERT_TRUE(std::holds_alternative<IntIncrement>(r));
  const auto& inc = std::get<IntIncrement>(r);
  const double witness = oracle::coset_sup(a, inc.b3.elements().members());
  EXPECT_NEAR(witness, inc.witness, 1e-9);
  EXPECT_GE(witness, 1.0 + params.eps / 16.0);
}

TEST(IncrementInt, RejectsNonUnitDilation) {
  const Group g = Group::cyclic(2001);
  const BohrSet b(g, {}, {});
  IntStepParams params;
  params.k = 3;
  EXPECT_THROW(increment_step_int(SubsetG::full(g), b, b, b, params, SiftConfig{}), Error);
  params.k = 1;
  params.eps = 0.5;
  EXPECT_THROW(increment_step_int(SubsetG::full(g), b, b, b, params, SiftConfig{}), Error);
}

}  // namespace
}  // namespace aplab
