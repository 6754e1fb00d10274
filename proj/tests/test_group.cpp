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
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "support/gen.hpp"
#include "verify/oracles.hpp"

namespace aplab {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInternalAssertion;
}

TEST(Group, Orders) {
  EXPECT_EQ(Group::vector_space(3, 4).order(), 81u);
  EXPECT_EQ(Group::cyclic(97).order(), 97u);
  EXPECT_EQ(make_group("v:5:3").order(), 125u);
  EXPECT_EQ(make_group("z:12").order(), 12u);
}

TEST(Group, RejectsBadDescriptors) {
  EXPECT_EQ(kind_of([] { Group::vector_space(4, 2); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { make_group("v:4:2"); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { make_group("q:7"); }), ErrorKind::kFormat);
  EXPECT_EQ(kind_of([] { make_group("z:"); }), ErrorKind::kFormat);
  EXPECT_EQ(kind_of([] { make_group("z:0"); }), ErrorKind::kInvalidArgument);
}

TEST(Group, DescriptorRoundTrip) {
  for (const char* d : {"v:3:4", "z:97", "v:7:2", "z:1"}) {
    EXPECT_EQ(make_group(d).descriptor(), d);
  }
}

TEST(Group, CoordinatesRoundTrip) {
  const Group g = Group::vector_space(5, 3);
  for (Index x = 0; x < g.order(); ++x) {
    const auto c = g.coords(x);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(g.encode(c), x);
  }
}

TEST(Characters, TrivialCharacterIsOne) {
  for (const char* d : {"z:12", "v:3:3"}) {
    const Group g = make_group(d);
    for (Index x = 0; x < g.order(); ++x) {
      EXPECT_NEAR(std::abs(char_eval(g, 0, x) - 1.0), 0.0, 1e-15);
    }
  }
}

TEST(Characters, Examples) {
  EXPECT_NEAR(std::abs(char_eval(Group::cyclic(4), 1, 2) - cplx(-1.0, 0.0)), 0.0, 1e-15);
  const Group g = Group::vector_space(3, 2);
  const std::vector<std::uint32_t> e1 = {1, 0}, ones = {1, 1};
  const cplx expected = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  EXPECT_NEAR(std::abs(char_eval(g, g.encode(e1), g.encode(ones)) - expected), 0.0, 1e-15);
}

TEST(Characters, MultiplicativeExhaustive) {
  for (const char* d : {"z:30", "v:3:3", "v:5:2"}) {
    const Group g = make_group(d);
    for (Index gamma = 0; gamma < g.order(); ++gamma) {
      for (Index x = 0; x < g.order(); ++x) {
        for (Index y = 0; y < g.order(); ++y) {
          ASSERT_LT(std::abs(char_eval(g, gamma, g.add(x, y)) -
                             char_eval(g, gamma, x) * char_eval(g, gamma, y)),
                    1e-12);
        }
      }
    }
  }
}

TEST(Subspace, AnnihilatorExamples) {
  const Group g = Group::vector_space(3, 4);
  const std::vector<Index> none;
  const Subspace all = Subspace::annihilator(g, none);
  EXPECT_EQ(all.codim(), 0u);
  EXPECT_EQ(all.size(), 81u);

  const std::vector<std::uint32_t> e1 = {1, 0, 0, 0}, e2 = {0, 1, 0, 0}, two_e1 = {2, 0, 0, 0};
  const std::vector<Index> both = {g.encode(e1), g.encode(e2)};
  const Subspace v = Subspace::annihilator(g, both);
  EXPECT_EQ(v.codim(), 2u);
  EXPECT_EQ(v.size(), 9u);

  const std::vector<Index> parallel = {g.encode(e1), g.encode(two_e1)};
  EXPECT_EQ(Subspace::annihilator(g, parallel).codim(), 1u);
}

TEST(Subspace, AnnihilatorRejectsCyclic) {
  const std::vector<Index> delta = {1};
  EXPECT_EQ(kind_of([&] { Subspace::annihilator(Group::cyclic(9), delta); }),
            ErrorKind::kUnsupportedKind);
}

TEST(Subspace, SpanDimExamples) {
  const Group g = Group::vector_space(3, 2);
  EXPECT_EQ(span_dim(g, std::vector<Index>{}), 0u);
  std::vector<Index> all(g.order());
  for (Index i = 0; i < g.order(); ++i) all[i] = i;
  EXPECT_EQ(span_dim(g, all), 2u);
}

TEST(Subspace, SpanDimMatchesElimination) {
  const Group g = Group::vector_space(5, 3);
  APLAB_FOR_ALL(100, 0x5d1, r) {
    std::vector<Index> delta;
    for (int i = 0; i < 5; ++i) delta.push_back(gen::element(r, g));
    EXPECT_EQ(span_dim(g, delta), oracle::gauss_rank(g, delta));
  }
}

TEST(Subspace, CodimEqualsSpanDim) {
  APLAB_FOR_ALL(100, 0xc0d, r) {
    const Group g = gen::odd_vector_space(r);
    std::vector<Index> delta;
    const auto m = r() % (g.n() + 2);
    for (std::size_t i = 0; i < m; ++i) delta.push_back(gen::element(r, g));
    const Subspace v = Subspace::annihilator(g, delta);
    EXPECT_EQ(v.codim(), span_dim(g, delta));
    std::size_t members = 0;
    for (Index x = 0; x < g.order(); ++x) {
      bool in = true;
      for (Index d : delta) in = in && g.pairing(d, x) == 0;
      members += in ? 1 : 0;
      EXPECT_EQ(v.contains(x), in);
    }
    EXPECT_EQ(members, v.size());
  }
}

TEST(Dilate, Examples) {
  const Group g7 = Group::cyclic(7);
  const SubsetG s(g7, {1, 2});
  EXPECT_EQ(dilate_set(1, s), s);
  EXPECT_EQ(dilate_set(3, s), SubsetG(g7, {3, 6}));
  const SubsetG t(Group::cyclic(12), {1, 5});
  EXPECT_EQ(kind_of([&] { dilate_set(4, t); }), ErrorKind::kInvalidDilate);
}

TEST(Dilate, PreservesSizeForUnits) {
  APLAB_FOR_ALL(50, 0xd11, r) {
    const Group g = gen::cyclic(r, 2, 300);
    const SubsetG s = gen::subset(r, g);
    const auto k = static_cast<std::int64_t>(r() % 1000) - 500;
    if (std::gcd(k, static_cast<std::int64_t>(g.order())) != 1) continue;
    EXPECT_EQ(dilate_set(k, s).size(), s.size());
  }
}

}  // namespace
}  // namespace aplab
