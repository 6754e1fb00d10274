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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aplab {

// Element (and, by self-duality, character) index in [0, order).
using Index = std::uint32_t;

enum class GroupKind { kVectorSpace, kCyclic };

inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 20;
inline constexpr std::size_t kMaxOracleOrder = std::size_t{1} << 12;

/// F_q^n or Z/N with canonical element indexing.
///
/// Vector-space elements are encoded as base-q digit strings, coordinate i
/// being digit i (least significant first). Characters use the same
/// encoding; the pairing is <v, x> = sum v_i x_i mod q for F_q^n and
/// r * x mod N for Z/N, and gamma_v(x) = exp(2 pi i <v, x> / m) with m the
/// pairing modulus.
class Group {
 public:
  static Group vector_space(std::uint32_t q, std::uint32_t n);
  static Group cyclic(std::uint32_t modulus);

  /// Parses `v:q:n` or `z:N`.
  static Group parse(std::string_view descriptor);
  std::string descriptor() const;

  GroupKind kind() const { return kind_; }
  bool is_vector_space() const { return kind_ == GroupKind::kVectorSpace; }
  bool is_cyclic() const { return kind_ == GroupKind::kCyclic; }
  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  // q for vector spaces, N for cyclic groups.
  std::uint32_t pairing_modulus() const { return modulus_; }
  std::size_t order() const { return order_; }

  Index add(Index x, Index y) const;
  Index sub(Index x, Index y) const;
  Index neg(Index x) const;
  Index scale(std::int64_t k, Index x) const;

  std::uint32_t pairing(Index gamma, Index x) const;

  std::vector<std::uint32_t> coords(Index x) const;
  Index encode(std::span<const std::uint32_t> coords) const;

  bool contains(std::int64_t index) const {
    return index >= 0 && static_cast<std::size_t>(index) < order_;
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.n_ == b.n_;
  }

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::kCyclic;
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 1;
  std::uint32_t modulus_ = 1;
  std::size_t order_ = 1;
  std::vector<std::uint32_t> place_;  // q^i
};

/// Parses a descriptor and validates it (make_group).
Group make_group(std::string_view descriptor);

bool is_prime(std::uint64_t value);

/// exp(2 pi i j / m) computed from the reduced fraction j/m.
std::complex<double> unit_root(std::uint64_t j, std::uint64_t m);

std::complex<double> char_eval(const Group& group, Index gamma, Index x);

void require_same_group(const Group& a, const Group& b);

/// Subspace of F_q^n. Stores both a reduced echelon basis of the subspace and
/// a reduced echelon basis of the constraints whose common kernel it is.
class Subspace {
 public:
  /// Kernel of all characters in `delta`: {x : <v, x> = 0 for all v}.
  static Subspace annihilator(const Group& group, std::span<const Index> delta);
  static Subspace span(const Group& group, std::span<const Index> vectors);

  const Group& group() const { return group_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return group_.n() - basis_.size(); }
  std::size_t size() const;
  bool contains(Index x) const;

  /// All elements, sorted ascending.
  std::vector<Index> elements() const;

  const std::vector<std::vector<std::uint32_t>>& basis() const { return basis_; }
  const std::vector<std::vector<std::uint32_t>>& constraints() const {
    return constraints_;
  }

  /// Coefficients of x in the echelon basis; x must lie in the subspace.
  std::vector<std::uint32_t> basis_coords(Index x) const;

 private:
  Subspace(Group group, std::vector<std::vector<std::uint32_t>> basis,
           std::vector<std::size_t> pivots,
           std::vector<std::vector<std::uint32_t>> constraints);

  Group group_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> constraints_;
};

Subspace annihilator_subspace(std::span<const Index> delta, const Group& group);

/// Rank over F_q of the given coordinate vectors.
std::size_t span_dim(const Group& group, std::span<const Index> delta);

}  // namespace aplab
