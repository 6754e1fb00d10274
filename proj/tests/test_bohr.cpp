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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "aplab/bohr.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "support/gen.hpp"
#include "verify/oracles.hpp"

namespace aplab {
namespace {

// Direct scan of max_j |gamma_j(x) - 1| against per-frequency widths.
std::vector<Index> scan(const Group& g, const std::vector<Index>& freqs,
                        const std::vector<double>& widths) {
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    bool in = true;
    for (std::size_t j = 0; j < freqs.size(); ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(g.pairing(freqs[j], x)) /
                           static_cast<double>(g.order());
      in = in && std::abs(std::polar(1.0, angle) - 1.0) <= widths[j] + 1e-12;
    }
    if (in) out.push_back(x);
  }
  return out;
}

std::vector<Index> random_freqs(gen::Rng& r, const Group& g, std::size_t rank) {
  std::vector<Index> f;
  while (f.size() < rank) {
    const auto x = static_cast<Index>(1 + r() % (g.order() - 1));
    if (std::find(f.begin(), f.end(), x) == f.end()) f.push_back(x);
  }
  return f;
}

TEST(BohrSet, EmptyFrequenciesGiveGroup) {
  const Group g = Group::cyclic(101);
  const BohrSet b = bohr_set(g, std::vector<Index>{}, 0.5);
  EXPECT_EQ(b.rank(), 0u);
  EXPECT_EQ(b.size(), 101u);
  EXPECT_DOUBLE_EQ(b.density(), 1.0);
}

TEST(BohrSet, IntervalMatchesScan) {
  const Group g = Group::cyclic(101);
  const std::vector<Index> f = {1};
  const BohrSet b = bohr_set(g, f, 0.5);
  const auto want = scan(g, f, {0.5});
  EXPECT_EQ(std::vector<Index>(b.elements().members().begin(), b.elements().members().end()), want);
}

TEST(BohrSet, ContainsZeroAndSymmetric) {
  APLAB_FOR_ALL(30, 0xb5e, r) {
    const Group g = gen::cyclic(r, 50, 2000);
    const BohrSet b = bohr_set(g, random_freqs(r, g, 1 + r() % 3), gen::uniform(r, 0.05, 2.0));
    EXPECT_TRUE(b.contains(0));
    for (Index x : b.elements().members()) EXPECT_TRUE(b.contains(g.neg(x)));
    EXPECT_TRUE(oracle::bohr_membership_matches(b));
  }
}

TEST(BohrSet, RejectsBadInput) {
  const std::vector<Index> f = {1};
  EXPECT_THROW(bohr_set(Group::vector_space(3, 2), f, 0.5), Error);
  EXPECT_THROW(bohr_set(Group::cyclic(11), f, 0.0), Error);
  EXPECT_THROW(bohr_set(Group::cyclic(11), f, 2.5), Error);
}

TEST(BohrSet, DescriptorRoundTrip) {
  const std::vector<Index> f = {3, 17};
  const BohrSet b = bohr_set(Group::cyclic(211), f, 0.75);
  const BohrSet back = BohrSet::parse(b.descriptor());
  EXPECT_EQ(back.elements(), b.elements());
  EXPECT_EQ(back.descriptor(), b.descriptor());
  EXPECT_THROW(BohrSet::parse("bohr z:211 [3:0.5"), Error);
}

TEST(Shrink, ExamplesAndNesting) {
  const Group g = Group::cyclic(211);
  const std::vector<Index> f = {1, 7};
  const BohrSet b = bohr_set(g, f, 1.2);
  EXPECT_EQ(shrink(b, 1.0).elements(), b.elements());
  const BohrSet s = shrink(b, 0.1);
  const auto want = scan(g, f, {0.12, 0.12});
  EXPECT_EQ(std::vector<Index>(s.elements().members().begin(), s.elements().members().end()), want);

  APLAB_FOR_ALL(20, 0x5a1, r) {
    const Group h = gen::cyclic(r, 100, 3000);
    const BohrSet c = bohr_set(h, random_freqs(r, h, 1 + r() % 3), gen::uniform(r, 0.1, 2.0));
    EXPECT_TRUE(shrink(c, 0.5).elements().is_subset_of(c.elements()));
  }
}

TEST(Regularity, RankZeroIsRegular) {
  const BohrSet b = bohr_set(Group::cyclic(50), std::vector<Index>{}, 1.0);
  const RegularityReport r = is_regular(b);
  EXPECT_TRUE(r.regular);
  EXPECT_LE(r.worst_ratio, 1.0);
  EXPECT_EQ(find_regular(b).elements(), b.elements());
}

TEST(Regularity, AgreesWithFineGrid) {
  const Group g = Group::cyclic(1009);
  const std::vector<Index> f = {1};
  const BohrSet b = bohr_set(g, f, 0.37);
  EXPECT_EQ(is_regular(b).regular, oracle::fine_grid_regular(b).regular);

  // Width placed exactly on a membership jump: x = 10 enters at 2 sin(10 pi / 1009).
  const double jump = 2.0 * std::sin(std::numbers::pi * 10.0 / 1009.0);
  const BohrSet edge = bohr_set(g, f, jump);
  if (oracle::fine_grid_regular(edge).regular) {
    EXPECT_TRUE(is_regular(edge).regular);
  }
  APLAB_FOR_ALL(20, 0x2e6, r) {
    const Group h = gen::cyclic(r, 200, 4000);
    const BohrSet c = bohr_set(h, random_freqs(r, h, 1 + r() % 2), gen::uniform(r, 0.2, 1.5));
    // The jump-exact test is at least as strict as the 256-point grid.
    if (is_regular(c).regular) {
      EXPECT_TRUE(oracle::fine_grid_regular(c).regular);
    }
  }
}

TEST(FindRegular, ScanRange) {
  const Group g = Group::cyclic(4093);
  const std::vector<Index> f = {1, 3};
  const BohrSet b = bohr_set(g, f, 0.8);
  const BohrSet reg = find_regular(b);
  EXPECT_EQ(reg.regularity(), Regularity::kRegular);
  EXPECT_TRUE(is_regular(reg).regular);
  EXPECT_TRUE(oracle::fine_grid_regular(reg).regular);
  for (double w : reg.widths()) {
    EXPECT_GE(w, 0.4 - 1e-12);
    EXPECT_LE(w, 0.8 + 1e-12);
  }
}

TEST(FindRegular, AlwaysPassesIsRegular) {
  APLAB_FOR_ALL(25, 0xf12, r) {
    const Group g = gen::cyclic(r, 500, 4100);
    const BohrSet b = bohr_set(g, random_freqs(r, g, 1 + r() % 3), gen::uniform(r, 0.2, 1.8));
    const BohrSet reg = find_regular(b);
    EXPECT_TRUE(is_regular(reg).regular);
    EXPECT_TRUE(reg.elements().is_subset_of(b.elements()));
  }
}

TEST(Join, Examples) {
  const Group g = Group::cyclic(211);
  const std::vector<Index> f = {1};
  const BohrSet b = bohr_set(g, f, 0.5);
  EXPECT_EQ(bohr_join(b, std::vector<Index>{}, 0.2).elements(), b.elements());
  EXPECT_EQ(bohr_join(b, std::vector<Index>{0}, 0.2).elements(), b.elements());
  const std::vector<Index> delta = {5};
  const BohrSet j = bohr_join(b, delta, 0.2);
  const auto want = scan(g, {1, 5}, {0.5, 0.2});
  EXPECT_EQ(std::vector<Index>(j.elements().members().begin(), j.elements().members().end()), want);
}

TEST(Join, NestingAndChordBound) {
  APLAB_FOR_ALL(25, 0x101, r) {
    const Group g = gen::cyclic(r, 100, 4100);
    const BohrSet b = bohr_set(g, random_freqs(r, g, 1 + r() % 3), gen::uniform(r, 0.2, 2.0));
    std::vector<Index> delta;
    for (int i = 0; i < 3; ++i) delta.push_back(gen::element(r, g));
    const double rho = gen::uniform(r, 0.05, 1.0);
    const BohrSet j = bohr_join(b, delta, rho);
    EXPECT_TRUE(j.elements().is_subset_of(b.elements()));
    for (Index t : j.elements().members()) {
      for (Index gamma : delta) EXPECT_LE(chord(g, gamma, t), rho + 1e-12);
    }
  }
}

TEST(BohrSet, MonotoneInWidth) {
  APLAB_FOR_ALL(20, 0x30a, r) {
    const Group g = gen::cyclic(r, 100, 4100);
    const auto freqs = random_freqs(r, g, 1 + r() % 3);
    std::size_t prev = 0;
    for (int i = 1; i <= 16; ++i) {
      const std::size_t sz = bohr_set(g, freqs, 2.0 * i / 16).size();
      EXPECT_GE(sz, std::max<std::size_t>(prev, 1));
      prev = sz;
    }
  }
}

TEST(Dilate, BohrSet) {
  const Group g = Group::cyclic(101);
  const std::vector<Index> f = {3};
  const BohrSet b = bohr_set(g, f, 0.6);
  const BohrSet d = dilate(b, 7);
  EXPECT_EQ(d.size(), b.size());
  for (Index x : b.elements().members()) EXPECT_TRUE(d.contains(g.scale(7, x)));
  EXPECT_THROW(dilate(bohr_set(Group::cyclic(12), std::vector<Index>{1}, 0.5), 3), Error);
}

TEST(Chord, MatchesComplexDistance) {
  const Group g = Group::cyclic(97);
  for (Index gamma : {Index{1}, Index{13}}) {
    for (Index x = 0; x < g.order(); ++x) {
      EXPECT_NEAR(chord(g, gamma, x), std::abs(char_eval(g, gamma, x) - 1.0), 1e-12);
    }
  }
}

}  // namespace
}  // namespace aplab
