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

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"
#include "aplab/increment.hpp"
#include "support/gen.hpp"
#include "verify/oracles.hpp"

namespace aplab {
namespace {

TEST(Measure, Examples) {
  const Group g = Group::cyclic(8);
  const GFunc full = normalized_measure(SubsetG::full(g));
  EXPECT_LE(max_abs_diff(full, GFunc::constant(g, 1.0)), 1e-15);
  const GFunc point = normalized_measure(SubsetG(g, {0}));
  EXPECT_DOUBLE_EQ(point[0].real(), 8.0);
  EXPECT_THROW(normalized_measure(SubsetG(g)), Error);
}

TEST(Measure, UnitMassAndSelfCorrelation) {
  APLAB_FOR_ALL(50, 0x3ea, r) {
    const Group g = gen::group(r);
    const SubsetG a = gen::subset(r, g);
    const GFunc mu = normalized_measure(a);
    EXPECT_NEAR(lp_norm(mu, 1), 1.0, 1e-12);
    EXPECT_NEAR(diff_convolve(mu, mu)[0].real(), 1.0 / a.density(), 1e-9 / a.density());
  }
}

TEST(Lo, Values) {
  EXPECT_NEAR(lo(1.0), std::log(2.0), 1e-15);
  EXPECT_NEAR(lo(2.0 / std::exp(2.0)), 2.0, 1e-12);
  EXPECT_NEAR(lo(0.01), 5.298317366548036, 1e-12);
  EXPECT_THROW(lo(0.0), Error);
  EXPECT_THROW(lo(1.5), Error);
}

TEST(Count3aps, FullGroup) {
  const ThreeAPReport r = count_3aps(SubsetG::full(Group::cyclic(7)));
  EXPECT_EQ(r.raw_triples, 49u);
  EXPECT_EQ(r.nontrivial_triples, 42u);
  EXPECT_EQ(r.normalized_num, 1u);
  EXPECT_EQ(r.normalized_den, 1u);
}

TEST(Count3aps, SmallExample) {
  const SubsetG a(Group::cyclic(7), {0, 1, 2});
  const ThreeAPReport r = count_3aps(a);
  EXPECT_EQ(r.raw_triples, oracle::brute_3aps(a));
  EXPECT_EQ(r.raw_triples, 5u);
}

TEST(Count3aps, RejectsEvenOrder) {
  EXPECT_THROW(count_3aps(SubsetG::full(Group::cyclic(8))), Error);
  EXPECT_THROW(count_3aps(SubsetG::full(Group::vector_space(2, 3))), Error);
}

TEST(Count3aps, MatchesBruteForce) {
  APLAB_FOR_ALL(60, 0x3a9, r) {
    static const char* pool[] = {"z:101", "z:1009", "z:243", "v:3:6", "v:5:3", "v:7:3", "z:1"};
    const Group g = make_group(pool[r() % std::size(pool)]);
    const SubsetG a = gen::subset(r, g);
    const ThreeAPReport rep = count_3aps(a);
    EXPECT_EQ(rep.raw_triples, oracle::brute_3aps(a)) << g.descriptor();
    EXPECT_EQ(rep.raw_triples - rep.nontrivial_triples, a.size());
  }
}

TEST(Count3aps, LargeCyclicUsesExactPath) {
  // Beyond the built-in cross-check size; compared with the pair oracle.
  auto r = gen::rng_for(9, 0);
  const Group g = Group::cyclic(8191);
  const SubsetG a = gen::subset(r, g, 0.05);
  EXPECT_EQ(count_3aps(a).raw_triples, oracle::brute_3aps(a));
}

TEST(Behrend, SmallCases) {
  for (std::uint32_t n : {8u, 9u, 20u, 100u}) {
    const SubsetG b = behrend_set(n);
    EXPECT_EQ(b.group().order(), 2u * n + 1);
    ASSERT_FALSE(b.empty());
    EXPECT_GE(b.members().front(), 1u);
    EXPECT_LE(b.members().back(), n);
    EXPECT_EQ(oracle::integer_3aps(b.members()), 0u) << n;
    EXPECT_EQ(count_3aps(b).nontrivial_triples, 0u) << n;
  }
  EXPECT_GE(behrend_set(8).size(), 4u);
  EXPECT_THROW(behrend_set(7), Error);
}

TEST(Behrend, Large) {
  for (std::uint32_t n : {1000u, 10000u}) {
    const SubsetG b = behrend_set(n);
    EXPECT_EQ(count_3aps(b).nontrivial_triples, 0u);
    EXPECT_EQ(oracle::integer_3aps(b.members()), 0u);
  }
}

TEST(RandomSet, Basics) {
  const Group g = Group::cyclic(4096);
  EXPECT_EQ(random_set(g, 1.0, 5).size(), 4096u);
  EXPECT_EQ(random_set(g, 0.3, 77), random_set(g, 0.3, 77));
  EXPECT_NE(random_set(g, 0.3, 77), random_set(g, 0.3, 78));
}

TEST(RandomSet, DensityBand) {
  const Group g = Group::cyclic(4096);
  double sum = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) sum += random_set(g, 0.3, s).density();
  // Mean of 100 draws: sd = sqrt(0.3 * 0.7 / 4096) / 10.
  const double sd = std::sqrt(0.3 * 0.7 / 4096.0) / 10.0;
  EXPECT_NEAR(sum / 100.0, 0.3, 3.0 * sd);
}

TEST(Planted, NoiseFreeInstance) {
  const Group g = Group::vector_space(3, 5);
  const PlantedInstance inst = planted_instance(g, 2, 0.0, 0.1, 11);
  EXPECT_TRUE(inst.v0.is_subset_of(inst.s));
  EXPECT_NEAR(sift_inner_product(inst.a1, inst.a2, inst.s), 1.0, 1e-12);
  EXPECT_EQ(inst.a, inst.v0);
}

TEST(Planted, AlwaysSatisfiesHypotheses) {
  APLAB_FOR_ALL(12, 0x91a, r) {
    const Group g = make_group(r() % 2 ? "v:3:5" : "v:5:3");
    const double eps = gen::uniform(r, 0.02, 0.12);
    const double noise = gen::uniform(r, 0.0, 0.08);
    const PlantedInstance inst = planted_instance(g, 1 + r() % 2, noise, eps, r());
    EXPECT_TRUE(check_hypotheses(inst.a, inst.a1, inst.a2, inst.s, eps, FfqAmbient{}).ok);
  }
}

TEST(Planted, ConcreteInstance) {
  const PlantedInstance inst = planted_instance(Group::vector_space(3, 5), 2, 0.05, 0.1, 1);
  const HypothesisReport h =
      check_hypotheses(inst.a, inst.a1, inst.a2, inst.s, 0.1, FfqAmbient{});
  EXPECT_TRUE(h.ok);
  EXPECT_GE(h.inner_product, 1.0 - 0.1);
  EXPECT_GE(h.min_corr_on_s, 1.0 + 4 * 0.1);
}

TEST(Planted, RejectsBadParameters) {
  const Group g = Group::vector_space(3, 4);
  EXPECT_THROW(planted_instance(g, 0, 0.0, 0.1, 1), Error);
  EXPECT_THROW(planted_instance(g, 5, 0.0, 0.1, 1), Error);
  EXPECT_THROW(planted_instance(g, 1, 0.0, 0.2, 1), Error);
  EXPECT_THROW(planted_instance(Group::cyclic(81), 1, 0.0, 0.1, 1), Error);
}

TEST(SetFile, RoundTripAndErrors) {
  const SubsetG a(Group::vector_space(3, 2), {0, 4, 8});
  std::stringstream ss;
  write_set(ss, a);
  EXPECT_EQ(ss.str(), "set v:3:2 3\n0\n4\n8\n");
  EXPECT_EQ(read_set(ss), a);

  for (const char* bad : {"sett z:7 1\n0\n", "set z:7 2\n0\n", "set z:7 1\n9\n",
                          "set z:7 2\n3\n1\n", "set z:7 1\nx\n"}) {
    std::stringstream in(bad);
    EXPECT_THROW(read_set(in), Error) << bad;
  }
}

}  // namespace
}  // namespace aplab
