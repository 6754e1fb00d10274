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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

namespace aplab::oracle {
namespace {

cplx character(const Group& g, Index gamma, Index x) {
  const double m = static_cast<double>(g.pairing_modulus());
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(g.pairing(gamma, x)) / m;
  return std::polar(1.0, angle);
}

}  // namespace

GFunc naive_dft(const GFunc& f) {
  const Group& g = f.group();
  GFunc out(g, Side::kFourier);
  const double n = static_cast<double>(g.order());
  for (Index gamma = 0; gamma < g.order(); ++gamma) {
    cplx acc{};
    for (Index x = 0; x < g.order(); ++x) acc += f[x] * std::conj(character(g, gamma, x));
    out[gamma] = acc / n;
  }
  return out;
}

GFunc direct_convolve(const GFunc& f, const GFunc& h) {
  const Group& g = f.group();
  GFunc out(g, Side::kPhysical);
  const double n = static_cast<double>(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    cplx acc{};
    for (Index y = 0; y < g.order(); ++y) acc += f[y] * h[g.sub(x, y)];
    out[x] = acc / n;
  }
  return out;
}

GFunc direct_diff_convolve(const GFunc& f, const GFunc& h) {
  const Group& g = f.group();
  GFunc out(g, Side::kPhysical);
  const double n = static_cast<double>(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    cplx acc{};
    for (Index y = 0; y < g.order(); ++y) acc += f[g.add(x, y)] * std::conj(h[y]);
    out[x] = acc / n;
  }
  return out;
}

std::uint64_t brute_3aps(const SubsetG& a) {
  const Group& g = a.group();
  std::uint64_t count = 0;
  for (Index x = 0; x < g.order(); ++x) {
    if (!a.contains(x)) continue;
    for (Index d = 0; d < g.order(); ++d) {
      const Index y = g.add(x, d);
      const Index z = g.add(y, d);
      if (a.contains(y) && a.contains(z)) ++count;
    }
  }
  return count;
}

std::uint64_t integer_3aps(std::span<const Index> values) {
  const std::set<Index> members(values.begin(), values.end());
  std::uint64_t count = 0;
  for (Index x : members) {
    for (Index z : members) {
      if (z <= x || (x + z) % 2 != 0) continue;
      if (members.count((x + z) / 2)) ++count;
    }
  }
  return count;
}

std::size_t gauss_rank(const Group& group, std::span<const Index> vectors) {
  const std::int64_t q = group.q();
  std::vector<std::vector<std::int64_t>> rows;
  for (Index v : vectors) {
    std::vector<std::int64_t> row;
    Index rest = v;
    for (std::uint32_t i = 0; i < group.n(); ++i) {
      row.push_back(rest % q);
      rest /= static_cast<Index>(q);
    }
    rows.push_back(row);
  }
  auto inv = [&](std::int64_t a) {
    for (std::int64_t b = 1; b < q; ++b) {
      if (a * b % q == 1) return b;
    }
    return std::int64_t{0};
  };
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < group.n() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t s = inv(rows[rank][col]);
    for (auto& e : rows[rank]) e = e * s % q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col];
      for (std::uint32_t c = 0; c < group.n(); ++c) {
        rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % q + q) % q;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<double> bohr_profile(const BohrSet& b) {
  const Group& g = b.group();
  const std::vector<double> w = b.widths();
  std::vector<double> prof(g.order(), 0.0);
  for (std::size_t j = 0; j < b.rank(); ++j) {
    for (Index x = 0; x < g.order(); ++x) {
      const double c = std::abs(character(g, b.freqs()[j], x) - 1.0) / w[j];
      prof[x] = std::max(prof[x], c);
    }
  }
  return prof;
}

bool bohr_membership_matches(const BohrSet& b) {
  const std::vector<double> prof = bohr_profile(b);
  for (Index x = 0; x < prof.size(); ++x) {
    const bool want = prof[x] <= 1.0;
    if (want != b.contains(x) && std::abs(prof[x] - 1.0) > 1e-9) return false;
  }
  return true;
}

FineGridReport fine_grid_regular(const BohrSet& b, int points) {
  FineGridReport report;
  const std::size_t d = b.rank();
  if (d == 0) {
    report.worst_ratio = 1.0;
    return report;
  }
  const std::vector<double> prof = bohr_profile(b);
  auto count = [&](double scale) {
    return static_cast<double>(
        std::count_if(prof.begin(), prof.end(), [&](double v) { return v <= scale; }));
  };
  const double size = count(1.0);
  const double kmax = 1.0 / (100.0 * static_cast<double>(d));
  double worst = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double kappa = kmax * i / points;
    const double slope = 100.0 * static_cast<double>(d) * kappa;
    worst = std::max(worst, count(1.0 + kappa) / ((1.0 + slope) * size));
    const double allowed = (1.0 - slope) * size;
    if (allowed > 0.0) worst = std::max(worst, allowed / count(1.0 - kappa));
  }
  report.worst_ratio = worst;
  report.regular = worst <= 1.0;
  return report;
}

double coset_sup(const SubsetG& a, std::span<const Index> h) {
  const Group& g = a.group();
  std::size_t best = 0;
  for (Index x = 0; x < g.order(); ++x) {
    std::size_t hits = 0;
    for (Index t : h) hits += a.contains(g.add(x, t)) ? 1 : 0;
    best = std::max(best, hits);
  }
  return static_cast<double>(best) / (static_cast<double>(h.size()) * a.density());
}

}  // namespace aplab::oracle
