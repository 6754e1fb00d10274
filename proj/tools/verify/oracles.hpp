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
#include <span>
#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"

// Slow, definition-level reimplementations used to check the library.
namespace aplab::oracle {

/// O(|G|^2) transform straight from the definition, using complex exponentials.
GFunc naive_dft(const GFunc& f);

/// E_y f(y) g(x - y) by direct summation.
GFunc direct_convolve(const GFunc& f, const GFunc& g);
/// E_y f(x + y) conj(g(y)) by direct summation.
GFunc direct_diff_convolve(const GFunc& f, const GFunc& g);

/// #{(x, d) : x, x + d, x + 2d in A}, double loop.
std::uint64_t brute_3aps(const SubsetG& a);

/// Nontrivial progressions of a set of positive integers, by pair scan.
std::uint64_t integer_3aps(std::span<const Index> values);

/// Rank over F_q by plain Gaussian elimination on coordinate rows.
std::size_t gauss_rank(const Group& group, std::span<const Index> vectors);

/// max_j |exp(2 pi i r_j x / N) - 1| / w_j for every x, from the descriptor widths.
std::vector<double> bohr_profile(const BohrSet& b);

/// Membership of B re-derived from its frequencies and widths. Elements whose
/// profile lies within 1e-9 of the boundary are not counted as mismatches.
bool bohr_membership_matches(const BohrSet& b);

struct FineGridReport {
  bool regular = true;
  double worst_ratio = 0.0;
};

/// Regularity on an evenly spaced grid of `points` kappa values in (0, 1/(100 d)].
FineGridReport fine_grid_regular(const BohrSet& b, int points = 256);

/// max_x |A cap (x + H)| / (|H| alpha), i.e. ||mu_H * mu_A||_inf for a symmetric H.
double coset_sup(const SubsetG& a, std::span<const Index> h);

}  // namespace aplab::oracle
