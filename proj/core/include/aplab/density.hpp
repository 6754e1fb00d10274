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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"

namespace aplab {

/// Subset of a group: sorted, duplicate-free member indices plus a membership
/// mask.
class SubsetG {
 public:
  explicit SubsetG(Group group);
  /// Sorts and de-duplicates; every index must lie in the group.
  SubsetG(Group group, std::vector<Index> members);

  static SubsetG full(const Group& group);

  const Group& group() const { return group_; }
  std::span<const Index> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  double density() const {
    return static_cast<double>(members_.size()) / static_cast<double>(group_.order());
  }
  bool contains(Index x) const { return x < mask_.size() && mask_[x] != 0; }
  bool is_subset_of(const SubsetG& other) const;

  /// {x + t : x in this set}.
  SubsetG shifted(Index t) const;

  friend bool operator==(const SubsetG& a, const SubsetG& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  Group group_;
  std::vector<Index> members_;
  std::vector<std::uint8_t> mask_;
};

SubsetG set_intersection(const SubsetG& a, const SubsetG& b);
SubsetG set_union(const SubsetG& a, const SubsetG& b);
SubsetG set_complement(const SubsetG& a);

/// 1_A as a physical-side function.
GFunc indicator(const SubsetG& a);
/// mu_A = alpha^{-1} 1_A; A must be nonempty.
GFunc normalized_measure(const SubsetG& a);

/// log(2 / delta), delta in (0, 1].
double lo(double delta);

/// {k s : s in S} on a cyclic group; gcd(k, N) must be 1.
SubsetG dilate_set(std::int64_t k, const SubsetG& s);

struct ThreeAPReport {
  // Ordered pairs (x, d), x, x+d, x+2d in A, d = 0 included.
  std::uint64_t raw_triples = 0;
  std::uint64_t nontrivial_triples = 0;
  // raw / |G|^2 in lowest terms.
  std::uint64_t normalized_num = 0;
  std::uint64_t normalized_den = 1;

  double normalized() const {
    return static_cast<double>(normalized_num) / static_cast<double>(normalized_den);
  }
};

/// Counts three-term progressions through the Fourier side (exact modular
/// transform on Z/N, complex transform with a rounding guard on F_q^n), and
/// for |G| <= 2^12 cross-checks against the direct double loop.
ThreeAPReport count_3aps(const SubsetG& a);

/// Progression-free subset of {1, ..., N} embedded in Z/(2N+1).
SubsetG behrend_set(std::uint32_t n);

/// Each element kept independently with probability alpha, drawn from the
/// counter-based generator keyed by seed.
SubsetG random_set(const Group& group, double alpha, std::uint64_t seed);

struct PlantedInstance {
  SubsetG a;
  SubsetG a1;
  SubsetG a2;
  SubsetG s;
  SubsetG v0;
  std::uint64_t seed = 0;  // seed that produced the accepted instance
};

/// Lemma-hypothesis fixture on F_q^n: A = V0 plus noise, A1 = A2 = A cap V0,
/// S = {x : mu_A o mu_A (x) >= 1 + 4 eps}. Retries seed, seed+1, ... up to
/// 100 attempts until the hypotheses hold.
PlantedInstance planted_instance(const Group& group, std::size_t codim0,
                                 double noise, double eps, std::uint64_t seed);

/// Set text file: `set <group> <cardinality>` then one index per line.
void write_set(std::ostream& out, const SubsetG& s);
SubsetG read_set(std::istream& in);

}  // namespace aplab
