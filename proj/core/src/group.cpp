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

#include "aplab/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "aplab/error.hpp"

namespace aplab {
namespace {

using Row = std::vector<std::uint32_t>;

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t q) {
  return pow_mod(a, q - 2, q);
}

// In-place reduced row echelon form over F_q; drops zero rows and returns the
// pivot column of each remaining row.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::uint32_t q,
                              std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const std::uint64_t inv = inv_mod_prime(rows[rank][col], q);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint64_t sub = factor * rows[rank][c] % q;
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + q - sub) % q);
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {x : <row, x> = 0 for every row}; rows must already be in RREF.
std::vector<Row> kernel(const std::vector<Row>& rows,
                        const std::vector<std::size_t>& pivots,
                        std::uint32_t q, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      v[pivots[i]] = (q - rows[i][f]) % q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Row> to_rows(const Group& group, std::span<const Index> vectors) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (Index v : vectors) {
    if (!group.contains(v)) {
      throw Error(ErrorKind::kInvalidArgument, "dual element out of range");
    }
    rows.push_back(group.coords(v));
  }
  return rows;
}

void require_vector_space(const Group& group) {
  if (!group.is_vector_space()) {
    throw Error(ErrorKind::kUnsupportedKind,
                "subspace algebra needs a vector-space group; got " +
                    group.descriptor());
  }
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kFormat,
                "bad " + std::string(what) + " in group descriptor: '" +
                    std::string(text) + "'");
  }
  return value;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

Group Group::vector_space(std::uint32_t q, std::uint32_t n) {
  if (!is_prime(q)) {
    throw Error(ErrorKind::kInvalidArgument,
                "vector-space characteristic must be prime, got " +
                    std::to_string(q));
  }
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "dimension must be >= 1");
  Group g;
  g.kind_ = GroupKind::kVectorSpace;
  g.q_ = q;
  g.n_ = n;
  g.modulus_ = q;
  std::size_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    g.place_.push_back(static_cast<std::uint32_t>(order));
    order *= q;
    if (order > kMaxGroupOrder) {
      throw Error(ErrorKind::kSizeLimit,
                  "group order exceeds 2^20: v:" + std::to_string(q) + ":" +
                      std::to_string(n));
    }
  }
  g.order_ = order;
  return g;
}

Group Group::cyclic(std::uint32_t modulus) {
  if (modulus < 1) throw Error(ErrorKind::kInvalidArgument, "N must be >= 1");
  if (modulus > kMaxGroupOrder) {
    throw Error(ErrorKind::kSizeLimit,
                "group order exceeds 2^20: z:" + std::to_string(modulus));
  }
  Group g;
  g.kind_ = GroupKind::kCyclic;
  g.q_ = 0;
  g.n_ = 1;
  g.modulus_ = modulus;
  g.order_ = modulus;
  return g;
}

Group Group::parse(std::string_view descriptor) {
  if (descriptor.size() > 2 && descriptor.substr(0, 2) == "z:") {
    return cyclic(parse_u32(descriptor.substr(2), "modulus"));
  }
  if (descriptor.size() > 2 && descriptor.substr(0, 2) == "v:") {
    auto rest = descriptor.substr(2);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::kFormat,
                  "expected v:q:n, got '" + std::string(descriptor) + "'");
    }
    return vector_space(parse_u32(rest.substr(0, colon), "q"),
                        parse_u32(rest.substr(colon + 1), "n"));
  }
  throw Error(ErrorKind::kFormat,
              "unknown group descriptor '" + std::string(descriptor) + "'");
}

Group make_group(std::string_view descriptor) { return Group::parse(descriptor); }

std::string Group::descriptor() const {
  if (is_cyclic()) return "z:" + std::to_string(modulus_);
  return "v:" + std::to_string(q_) + ":" + std::to_string(n_);
}

Index Group::add(Index x, Index y) const {
  if (is_cyclic()) {
    std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<Index>(s >= modulus_ ? s - modulus_ : s);
  }
  Index out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = x % q_ + y % q_;
    if (d >= q_) d -= q_;
    out += d * place_[i];
    x /= q_;
    y /= q_;
  }
  return out;
}

Index Group::neg(Index x) const {
  if (is_cyclic()) return x == 0 ? 0 : modulus_ - x;
  Index out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = x % q_;
    out += (d == 0 ? 0 : q_ - d) * place_[i];
    x /= q_;
  }
  return out;
}

Index Group::sub(Index x, Index y) const { return add(x, neg(y)); }

Index Group::scale(std::int64_t k, Index x) const {
  const std::int64_t m = modulus_;
  const auto kk = static_cast<std::uint64_t>(((k % m) + m) % m);
  if (is_cyclic()) return static_cast<Index>(kk * x % modulus_);
  Index out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += static_cast<Index>(kk * (x % q_) % q_) * place_[i];
    x /= q_;
  }
  return out;
}

std::uint32_t Group::pairing(Index gamma, Index x) const {
  if (is_cyclic()) {
    return static_cast<std::uint32_t>(std::uint64_t{gamma} * x % modulus_);
  }
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    acc += std::uint64_t{gamma % q_} * (x % q_);
    gamma /= q_;
    x /= q_;
  }
  return static_cast<std::uint32_t>(acc % q_);
}

std::vector<std::uint32_t> Group::coords(Index x) const {
  if (is_cyclic()) return {x};
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = x % q_;
    x /= q_;
  }
  return out;
}

Index Group::encode(std::span<const std::uint32_t> coords) const {
  if (is_cyclic()) {
    if (coords.size() != 1) {
      throw Error(ErrorKind::kInvalidArgument, "cyclic element has one coordinate");
    }
    return coords[0] % modulus_;
  }
  if (coords.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument, "coordinate vector has wrong length");
  }
  Index out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) out += (coords[i] % q_) * place_[i];
  return out;
}

std::complex<double> unit_root(std::uint64_t j, std::uint64_t m) {
  j %= m;
  if (j == 0) return {1.0, 0.0};
  // Fold into the first half-turn so cos/sin see the smallest angle.
  if (2 * j == m) return {-1.0, 0.0};
  if (4 * j == m) return {0.0, 1.0};
  if (4 * j == 3 * m) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(m);
  if (2 * j > m) {
    const double back = 2.0 * std::numbers::pi * static_cast<double>(m - j) /
                        static_cast<double>(m);
    return {std::cos(back), -std::sin(back)};
  }
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> char_eval(const Group& group, Index gamma, Index x) {
  if (!group.contains(gamma) || !group.contains(x)) {
    throw Error(ErrorKind::kGroupMismatch, "element not in " + group.descriptor());
  }
  return unit_root(group.pairing(gamma, x), group.pairing_modulus());
}

void require_same_group(const Group& a, const Group& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::kGroupMismatch,
                "group mismatch: " + a.descriptor() + " vs " + b.descriptor());
  }
}

Subspace::Subspace(Group group, std::vector<Row> basis,
                   std::vector<std::size_t> pivots, std::vector<Row> constraints)
    : group_(std::move(group)),
      basis_(std::move(basis)),
      pivots_(std::move(pivots)),
      constraints_(std::move(constraints)) {}

Subspace Subspace::annihilator(const Group& group, std::span<const Index> delta) {
  require_vector_space(group);
  const std::size_t n = group.n();
  const std::uint32_t q = group.q();
  auto constraints = to_rows(group, delta);
  auto cpiv = rref(constraints, q, n);
  auto basis = kernel(constraints, cpiv, q, n);
  auto bpiv = rref(basis, q, n);
  return Subspace(group, std::move(basis), std::move(bpiv), std::move(constraints));
}

Subspace Subspace::span(const Group& group, std::span<const Index> vectors) {
  require_vector_space(group);
  const std::size_t n = group.n();
  const std::uint32_t q = group.q();
  auto basis = to_rows(group, vectors);
  auto bpiv = rref(basis, q, n);
  auto constraints = kernel(basis, bpiv, q, n);
  rref(constraints, q, n);
  return Subspace(group, std::move(basis), std::move(bpiv), std::move(constraints));
}

std::size_t Subspace::size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) s *= group_.q();
  return s;
}

bool Subspace::contains(Index x) const {
  for (const auto& row : constraints_) {
    if (group_.pairing(group_.encode(row), x) != 0) return false;
  }
  return true;
}

std::vector<Index> Subspace::elements() const {
  const std::uint32_t q = group_.q();
  std::vector<Index> generators;
  generators.reserve(basis_.size());
  for (const auto& b : basis_) generators.push_back(group_.encode(b));
  std::vector<Index> out{0};
  out.reserve(size());
  for (Index g : generators) {
    const std::size_t current = out.size();
    Index step = g;
    for (std::uint32_t c = 1; c < q; ++c) {
      for (std::size_t i = 0; i < current; ++i) out.push_back(group_.add(out[i], step));
      step = group_.add(step, g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> Subspace::basis_coords(Index x) const {
  const auto c = group_.coords(x);
  std::vector<std::uint32_t> out(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[i] = c[pivots_[i]];
  return out;
}

Subspace annihilator_subspace(std::span<const Index> delta, const Group& group) {
  return Subspace::annihilator(group, delta);
}

std::size_t span_dim(const Group& group, std::span<const Index> delta) {
  require_vector_space(group);
  auto rows = to_rows(group, delta);
  return rref(rows, group.q(), group.n()).size();
}

}  // namespace aplab
