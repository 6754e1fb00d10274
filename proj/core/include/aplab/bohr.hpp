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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aplab/density.hpp"
#include "aplab/group.hpp"

namespace aplab {

enum class Regularity { kUnknown, kRegular, kIrregular };

/// |gamma(x) - 1| for the character gamma of a cyclic group, computed as
/// 2 sin(pi ||r x / N||) from the exact residue.
double chord(const Group& group, Index gamma, Index x);

/// Bohr set {x : |gamma_j(x) - 1| <= w_j for every frequency j} in Z/N, with
/// one width per frequency.
///
/// A set is stored as base widths plus a dilation factor c (effective width
/// c * w_j), and the per-element profile s(x) = max_j |gamma_j(x) - 1| / w_j
/// is computed once per base. Membership at factor c is s(x) <= c, so
/// shrinking and regularity scans never rescan the frequencies.
class BohrSet {
 public:
  BohrSet(const Group& group, std::vector<Index> freqs, std::vector<double> widths);

  const Group& group() const { return base_->group; }
  std::span<const Index> freqs() const { return base_->freqs; }
  /// Effective widths c * w_j.
  std::vector<double> widths() const;
  std::size_t rank() const { return base_->freqs.size(); }
  double scale() const { return scale_; }

  const SubsetG& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  double density() const { return elements_.density(); }
  bool contains(Index x) const { return elements_.contains(x); }

  Regularity regularity() const { return regularity_; }

  /// s(x) relative to the base widths.
  double profile(Index x) const { return base_->profile[x]; }
  std::span<const double> sorted_profile() const { return base_->sorted_profile; }
  /// #{x : s(x) <= c}; the size of the set dilated to factor c.
  std::size_t count_at_scale(double c) const;

  /// Same frequencies, effective widths multiplied by `factor`.
  BohrSet scaled(double factor) const;
  BohrSet with_regularity(Regularity r) const;

  /// `bohr z:N [f1:w1,f2:w2,...]` listing effective widths.
  std::string descriptor() const;
  static BohrSet parse(std::string_view text);

 private:
  struct Base {
    Group group;
    std::vector<Index> freqs;
    std::vector<double> widths;
    std::vector<double> profile;
    std::vector<double> sorted_profile;
  };

  BohrSet(std::shared_ptr<const Base> base, double scale, Regularity r);
  static std::shared_ptr<const Base> make_base(const Group& group,
                                               std::vector<Index> freqs,
                                               std::vector<double> widths);
  friend BohrSet dilate(const BohrSet& b, std::int64_t k);

  std::shared_ptr<const Base> base_;
  double scale_ = 1.0;
  SubsetG elements_;
  Regularity regularity_ = Regularity::kUnknown;
};

/// B(Gamma, rho) with a common width rho in (0, 2].
BohrSet bohr_set(const Group& group, std::span<const Index> freqs, double width);

/// Same frequencies, widths multiplied by c in (0, 1].
BohrSet shrink(const BohrSet& b, double c);

struct RegularityReport {
  bool regular = true;
  // Largest observed (actual / allowed) over every check; <= 1 iff regular.
  double worst_ratio = 0.0;
};

inline constexpr int kRegularityGrid = 32;
inline constexpr int kRegularScanSteps = 64;

/// Two-sided size-stability test: for every kappa in (0, 1/(100 d)],
/// |B_{(1+kappa)rho}| <= (1 + 100 d kappa)|B| and
/// |B_{(1-kappa)rho}| >= (1 - 100 d kappa)|B|. Evaluated on a 32-point grid
/// and additionally at every kappa where either count jumps, so the verdict
/// holds for all kappa in the window, not only at grid points.
RegularityReport is_regular(const BohrSet& b);

/// First regular set among 64 geometrically spaced dilation factors from 1
/// down to 1/2; throws kSearchFailure listing the ratios if none is regular.
BohrSet find_regular(const BohrSet& b);

/// Frequencies Gamma u Delta; existing widths kept, new (nonzero) frequencies
/// get `width_new`. +r and -r impose the same constraint and are merged.
BohrSet bohr_join(const BohrSet& b, std::span<const Index> delta, double width_new);

/// k * B = {k x : x in B}; gcd(k, N) must be 1.
BohrSet dilate(const BohrSet& b, std::int64_t k);

}  // namespace aplab
