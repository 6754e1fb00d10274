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

#include "aplab/density.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "aplab/error.hpp"
#include "aplab/ntt.hpp"
#include "aplab/rng.hpp"

namespace aplab {

SubsetG::SubsetG(Group group) : group_(std::move(group)), mask_(group_.order(), 0) {}

SubsetG::SubsetG(Group group, std::vector<Index> members)
    : group_(std::move(group)), members_(std::move(members)), mask_(group_.order(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index x : members_) {
    if (!group_.contains(x)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "element " + std::to_string(x) + " not in " + group_.descriptor());
    }
    mask_[x] = 1;
  }
}

SubsetG SubsetG::full(const Group& group) {
  std::vector<Index> all(group.order());
  std::iota(all.begin(), all.end(), Index{0});
  return SubsetG(group, std::move(all));
}

bool SubsetG::is_subset_of(const SubsetG& other) const {
  if (!(group_ == other.group_)) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Index x) { return other.contains(x); });
}

SubsetG SubsetG::shifted(Index t) const {
  std::vector<Index> out;
  out.reserve(members_.size());
  for (Index x : members_) out.push_back(group_.add(x, t));
  return SubsetG(group_, std::move(out));
}

SubsetG set_intersection(const SubsetG& a, const SubsetG& b) {
  require_same_group(a.group(), b.group());
  std::vector<Index> out;
  for (Index x : a.members()) {
    if (b.contains(x)) out.push_back(x);
  }
  return SubsetG(a.group(), std::move(out));
}

SubsetG set_union(const SubsetG& a, const SubsetG& b) {
  require_same_group(a.group(), b.group());
  std::vector<Index> out(a.members().begin(), a.members().end());
  out.insert(out.end(), b.members().begin(), b.members().end());
  return SubsetG(a.group(), std::move(out));
}

SubsetG set_complement(const SubsetG& a) {
  std::vector<Index> out;
  for (Index x = 0; x < a.group().order(); ++x) {
    if (!a.contains(x)) out.push_back(x);
  }
  return SubsetG(a.group(), std::move(out));
}

GFunc indicator(const SubsetG& a) {
  GFunc f(a.group(), Side::kPhysical);
  for (Index x : a.members()) f[x] = 1.0;
  return f;
}

GFunc normalized_measure(const SubsetG& a) {
  if (a.empty()) {
    throw Error(ErrorKind::kEmptySet, "normalized measure of an empty set");
  }
  GFunc f(a.group(), Side::kPhysical);
  const double height =
      static_cast<double>(a.group().order()) / static_cast<double>(a.size());
  for (Index x : a.members()) f[x] = height;
  return f;
}

double lo(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw Error(ErrorKind::kDomain, "lo(delta) needs delta in (0, 1]");
  }
  return std::log(2.0 / delta);
}

SubsetG dilate_set(std::int64_t k, const SubsetG& s) {
  const Group& g = s.group();
  if (!g.is_cyclic()) {
    throw Error(ErrorKind::kUnsupportedKind, "dilates are defined on cyclic groups");
  }
  const std::int64_t n = g.pairing_modulus();
  if (std::gcd(((k % n) + n) % n, n) != 1) {
    throw Error(ErrorKind::kInvalidDilate,
                "dilate factor " + std::to_string(k) + " is not coprime to " +
                    std::to_string(n));
  }
  std::vector<Index> out;
  out.reserve(s.size());
  for (Index x : s.members()) out.push_back(g.scale(k, x));
  return SubsetG(g, std::move(out));
}

namespace {

std::uint64_t brute_force_3aps(const SubsetG& a) {
  const Group& g = a.group();
  std::uint64_t count = 0;
  for (Index x : a.members()) {
    for (Index d = 0; d < g.order(); ++d) {
      const Index y = g.add(x, d);
      if (!a.contains(y)) continue;
      if (a.contains(g.add(y, d))) ++count;
    }
  }
  return count;
}

std::uint64_t cyclic_3aps(const SubsetG& a) {
  const Group& g = a.group();
  const std::size_t n = g.order();
  std::vector<std::uint64_t> ind(n, 0);
  for (Index x : a.members()) ind[x] = 1;
  // c[z] = #{(x, y) in A^2 : x + y = z}; a progression is x + z = 2y.
  const auto c = ntt::cyclic_convolve(ind, ind);
  std::uint64_t raw = 0;
  for (Index y : a.members()) raw += c[(2 * static_cast<std::uint64_t>(y)) % n];
  return raw;
}

std::uint64_t vector_space_3aps(const SubsetG& a) {
  const Group& g = a.group();
  const GFunc ah = dft(indicator(a));
  // #{x + z = 2y} = |G|^2 sum_gamma conj(A^(gamma))^2 A^(2 gamma).
  cplx acc{};
  for (Index gamma = 0; gamma < g.order(); ++gamma) {
    const cplx c = std::conj(ah[gamma]);
    acc += c * c * ah[g.scale(2, gamma)];
  }
  const double order = static_cast<double>(g.order());
  acc *= order * order;
  const double rounded = std::round(acc.real());
  if (std::abs(acc.real() - rounded) > 0.25 || std::abs(acc.imag()) > 0.25) {
    throw Error(ErrorKind::kPrecision,
                "Fourier progression count is not near an integer");
  }
  return static_cast<std::uint64_t>(rounded);
}

}  // namespace

ThreeAPReport count_3aps(const SubsetG& a) {
  const Group& g = a.group();
  if (g.pairing_modulus() % 2 == 0) {
    throw Error(ErrorKind::kUnsupportedKind,
                "progression counting needs odd order (x -> 2x bijective); got " +
                    g.descriptor());
  }
  ThreeAPReport r;
  r.raw_triples = g.is_cyclic() ? cyclic_3aps(a) : vector_space_3aps(a);
  if (g.order() <= kMaxOracleOrder) {
    const std::uint64_t brute = brute_force_3aps(a);
    if (brute != r.raw_triples) {
      throw Error(ErrorKind::kInternalAssertion,
                  "progression count mismatch: fourier " +
                      std::to_string(r.raw_triples) + " vs direct " +
                      std::to_string(brute));
    }
  }
  r.nontrivial_triples = r.raw_triples - a.size();
  const std::uint64_t den = static_cast<std::uint64_t>(g.order()) * g.order();
  const std::uint64_t common = std::gcd(r.raw_triples, den);
  r.normalized_num = r.raw_triples / (common == 0 ? 1 : common);
  r.normalized_den = den / (common == 0 ? 1 : common);
  return r;
}

namespace {

// Visits every x in [0, limit) whose base-(2d-1) digits are all <= d-1,
// reporting x together with its squared digit norm.
template <typename Visit>
void walk_digit_box(std::uint64_t limit, std::uint64_t d, Visit&& visit) {
  const std::uint64_t base = 2 * d - 1;
  std::vector<std::uint64_t> place{1};
  while (place.back() * base < limit) place.push_back(place.back() * base);
  const std::size_t m = place.size();
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t value,
                 std::uint64_t norm) -> void {
    if (value >= limit) return;
    if (pos == 0) {
      visit(value, norm);
      return;
    }
    const std::uint64_t pl = place[pos - 1];
    for (std::uint64_t digit = 0; digit < d; ++digit) {
      const std::uint64_t next = value + digit * pl;
      if (next >= limit) break;
      self(self, pos - 1, next, norm + digit * digit);
    }
  };
  rec(rec, m, 0, 0);
}

}  // namespace

SubsetG behrend_set(std::uint32_t n) {
  if (n < 8 || n > 1'000'000) {
    throw Error(ErrorKind::kDomain, "behrend_set needs 8 <= N <= 10^6");
  }
  const Group g = Group::cyclic(2 * n + 1);
  // Digits 0..d-1 in base 2d-1 never carry when two numbers are added, so
  // x + z = 2y holds digitwise; on a sphere sum a_i^2 = r strict convexity
  // forces x = y = z. For d = 2 the digit equation alone forces it, so the
  // whole {0,1}-digit box in base 3 qualifies as well.
  std::size_t best_size = 0;
  std::uint64_t best_d = 2;
  std::int64_t best_norm = -1;  // -1 encodes the full d = 2 box
  walk_digit_box(n, 2, [&](std::uint64_t, std::uint64_t) { ++best_size; });

  const auto d_max = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) / 2 + 2;
  for (std::uint64_t d = 2; d <= d_max; ++d) {
    std::map<std::uint64_t, std::size_t> by_norm;
    walk_digit_box(n, d, [&](std::uint64_t, std::uint64_t norm) { ++by_norm[norm]; });
    for (const auto& [norm, count] : by_norm) {
      if (count > best_size) {
        best_size = count;
        best_d = d;
        best_norm = static_cast<std::int64_t>(norm);
      }
    }
  }
  std::vector<Index> members;
  members.reserve(best_size);
  walk_digit_box(n, best_d, [&](std::uint64_t x, std::uint64_t norm) {
    if (best_norm < 0 || static_cast<std::int64_t>(norm) == best_norm) {
      members.push_back(static_cast<Index>(x + 1));
    }
  });
  return SubsetG(g, std::move(members));
}

SubsetG random_set(const Group& group, double alpha, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kDomain, "random_set needs alpha in (0, 1]");
  }
  const CounterRng rng(seed, /*stream=*/0x5e7);
  std::vector<Index> members;
  for (Index x = 0; x < group.order(); ++x) {
    if (rng.uniform_at(x) < alpha) members.push_back(x);
  }
  return SubsetG(group, std::move(members));
}

void write_set(std::ostream& out, const SubsetG& s) {
  out << "set " << s.group().descriptor() << ' ' << s.size() << '\n';
  for (Index x : s.members()) out << x << '\n';
}

SubsetG read_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kFormat, "empty set file");
  std::istringstream header(line);
  std::string tag, desc, extra;
  long long card = -1;
  if (!(header >> tag >> desc >> card) || tag != "set" || card < 0 || (header >> extra)) {
    throw Error(ErrorKind::kFormat, "bad set header: '" + line + "'");
  }
  const Group g = Group::parse(desc);
  std::vector<Index> members;
  long long prev = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long long x = -1;
    if (!(row >> x) || (row >> extra)) {
      throw Error(ErrorKind::kFormat, "bad set line: '" + line + "'");
    }
    if (!g.contains(x)) {
      throw Error(ErrorKind::kFormat, "set element out of range: " + line);
    }
    if (x <= prev) {
      throw Error(ErrorKind::kFormat, "set elements must be strictly ascending");
    }
    prev = x;
    members.push_back(static_cast<Index>(x));
  }
  if (static_cast<long long>(members.size()) != card) {
    throw Error(ErrorKind::kFormat, "set cardinality does not match header");
  }
  return SubsetG(g, std::move(members));
}

}  // namespace aplab
