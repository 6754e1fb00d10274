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

#include "aplab/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <tuple>

#include "aplab/error.hpp"

namespace aplab {
namespace {

void require_cyclic(const Group& group) {
  if (!group.is_cyclic()) {
    throw Error(ErrorKind::kUnsupportedKind,
                "Bohr sets are built on cyclic groups; got " + group.descriptor());
  }
}

double chord_of_residue(std::uint64_t m, std::uint64_t n) {
  const std::uint64_t folded = std::min(m, n - m);
  if (folded == 0) return 0.0;
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(folded) /
                        static_cast<double>(n));
}

std::int64_t inverse_mod(std::int64_t k, std::int64_t n) {
  std::int64_t a = ((k % n) + n) % n, m = n, x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t q = a / m;
    std::tie(a, m) = std::make_pair(m, a - q * m);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return ((x0 % n) + n) % n;
}

}  // namespace

double chord(const Group& group, Index gamma, Index x) {
  require_cyclic(group);
  return chord_of_residue(group.pairing(gamma, x), group.order());
}

std::shared_ptr<const BohrSet::Base> BohrSet::make_base(const Group& group,
                                                        std::vector<Index> freqs,
                                                        std::vector<double> widths) {
  require_cyclic(group);
  if (freqs.size() != widths.size()) {
    throw Error(ErrorKind::kInvalidArgument, "one width per frequency required");
  }
  const std::size_t n = group.order();
  std::vector<std::pair<Index, double>> fw;
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    if (!(widths[j] > 0.0) || !std::isfinite(widths[j])) {
      throw Error(ErrorKind::kDomain, "Bohr widths must be positive");
    }
    fw.emplace_back(static_cast<Index>(freqs[j] % n), widths[j]);
  }
  std::sort(fw.begin(), fw.end());
  auto base = std::make_shared<Base>(Base{group, {}, {}, {}, {}});
  for (const auto& [f, w] : fw) {
    if (!base->freqs.empty() && base->freqs.back() == f) {
      base->widths.back() = std::min(base->widths.back(), w);
      continue;
    }
    base->freqs.push_back(f);
    base->widths.push_back(w);
  }
  std::vector<double> table(n);
  for (std::size_t m = 0; m < n; ++m) table[m] = chord_of_residue(m, n);
  base->profile.assign(n, 0.0);
  for (std::size_t j = 0; j < base->freqs.size(); ++j) {
    const std::size_t r = base->freqs[j];
    const double inv_w = 1.0 / base->widths[j];
    std::size_t rx = 0;
    for (std::size_t x = 0; x < n; ++x) {
      base->profile[x] = std::max(base->profile[x], table[rx] * inv_w);
      rx += r;
      if (rx >= n) rx -= n;
    }
  }
  base->sorted_profile = base->profile;
  std::sort(base->sorted_profile.begin(), base->sorted_profile.end());
  return base;
}

namespace {

SubsetG members_at(const Group& group, std::span<const double> profile, double c) {
  std::vector<Index> members;
  for (Index x = 0; x < profile.size(); ++x) {
    if (profile[x] <= c) members.push_back(x);
  }
  return SubsetG(group, std::move(members));
}

}  // namespace

BohrSet::BohrSet(const Group& group, std::vector<Index> freqs,
                 std::vector<double> widths)
    : BohrSet(make_base(group, std::move(freqs), std::move(widths)), 1.0,
              Regularity::kUnknown) {}

BohrSet::BohrSet(std::shared_ptr<const Base> base, double scale, Regularity r)
    : base_(std::move(base)),
      scale_(scale),
      elements_(members_at(base_->group, base_->profile, scale)),
      regularity_(r) {}

std::vector<double> BohrSet::widths() const {
  std::vector<double> out(base_->widths);
  for (auto& w : out) w *= scale_;
  return out;
}

std::size_t BohrSet::count_at_scale(double c) const {
  const auto& s = base_->sorted_profile;
  return static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), c) - s.begin());
}

BohrSet BohrSet::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorKind::kDomain, "scale factor must be positive");
  return BohrSet(base_, scale_ * factor, Regularity::kUnknown);
}

BohrSet BohrSet::with_regularity(Regularity r) const {
  BohrSet out = *this;
  out.regularity_ = r;
  return out;
}

std::string BohrSet::descriptor() const {
  std::string out = "bohr " + group().descriptor() + " [";
  const auto w = widths();
  char buf[64];
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%s%u:%.17g", j ? "," : "", base_->freqs[j], w[j]);
    out += buf;
  }
  out += "]";
  return out;
}

BohrSet BohrSet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, desc, body, extra;
  if (!(in >> tag >> desc) || tag != "bohr") {
    throw Error(ErrorKind::kFormat, "bad Bohr descriptor: '" + std::string(text) + "'");
  }
  std::getline(in, body);
  const auto open = body.find('[');
  const auto close = body.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      body.find_first_not_of(' ', close + 1) != std::string::npos) {
    throw Error(ErrorKind::kFormat, "Bohr descriptor needs a [f:w,...] list");
  }
  const Group g = Group::parse(desc);
  std::vector<Index> freqs;
  std::vector<double> widths;
  std::string list = body.substr(open + 1, close - open - 1);
  std::stringstream items(list);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kFormat, "Bohr frequency entry needs f:w, got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      const long long f = std::stoll(item.substr(0, colon), &used);
      const std::string wtext = item.substr(colon + 1);
      std::size_t wused = 0;
      const double w = std::stod(wtext, &wused);
      if (f < 0 || !g.contains(f) ||
          wtext.find_first_not_of(' ', wused) != std::string::npos) {
        throw std::invalid_argument("range");
      }
      freqs.push_back(static_cast<Index>(f));
      widths.push_back(w);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kFormat, "bad Bohr frequency entry '" + item + "'");
    }
  }
  return BohrSet(g, std::move(freqs), std::move(widths));
}

BohrSet bohr_set(const Group& group, std::span<const Index> freqs, double width) {
  require_cyclic(group);
  if (!(width > 0.0 && width <= 2.0)) {
    throw Error(ErrorKind::kDomain, "Bohr width must lie in (0, 2]");
  }
  return BohrSet(group, std::vector<Index>(freqs.begin(), freqs.end()),
                 std::vector<double>(freqs.size(), width));
}

BohrSet shrink(const BohrSet& b, double c) {
  if (!(c > 0.0 && c <= 1.0)) throw Error(ErrorKind::kDomain, "shrink factor must lie in (0, 1]");
  return b.scaled(c);
}

RegularityReport is_regular(const BohrSet& b) {
  const std::size_t d = b.rank();
  RegularityReport report;
  if (d == 0) {
    report.worst_ratio = 1.0;
    return report;
  }
  const double c = b.scale();
  const double size = static_cast<double>(b.count_at_scale(c));
  const double kappa_max = 1.0 / (100.0 * static_cast<double>(d));
  const double slope = 100.0 * static_cast<double>(d);
  double worst = 0.0;
  auto upper = [&](double kappa, double count) {
    worst = std::max(worst, count / ((1.0 + slope * kappa) * size));
  };
  auto lower = [&](double kappa, double count) {
    const double allowed = (1.0 - slope * kappa) * size;
    if (allowed <= 0.0) return;
    worst = std::max(worst, count > 0.0 ? allowed / count
                                        : std::numeric_limits<double>::infinity());
  };
  for (int j = 1; j <= kRegularityGrid; ++j) {
    const double kappa = kappa_max * j / kRegularityGrid;
    upper(kappa, static_cast<double>(b.count_at_scale(c * (1.0 + kappa))));
    lower(kappa, static_cast<double>(b.count_at_scale(c * (1.0 - kappa))));
  }
  // Between grid points the counts only change at profile values; the
  // binding case for each jump is the kappa at which it happens.
  const auto sorted = b.sorted_profile();
  const double hi = c * (1.0 + kappa_max);
  for (auto it = std::upper_bound(sorted.begin(), sorted.end(), c);
       it != sorted.end() && *it <= hi; ++it) {
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), *it) - sorted.begin();
    upper(*it / c - 1.0, static_cast<double>(count));
  }
  const double lo_edge = c * (1.0 - kappa_max);
  for (auto it = std::lower_bound(sorted.begin(), sorted.end(), lo_edge);
       it != sorted.end() && *it <= c; ++it) {
    const auto count = std::lower_bound(sorted.begin(), sorted.end(), *it) - sorted.begin();
    lower(1.0 - *it / c, static_cast<double>(count));
  }
  report.worst_ratio = worst;
  report.regular = worst <= 1.0;
  return report;
}

BohrSet find_regular(const BohrSet& b) {
  if (b.rank() == 0) return b.with_regularity(Regularity::kRegular);
  std::string ratios;
  char buf[48];
  for (int i = 0; i < kRegularScanSteps; ++i) {
    const double factor = std::exp2(-static_cast<double>(i) / (kRegularScanSteps - 1));
    BohrSet candidate = b.scaled(factor);
    const RegularityReport r = is_regular(candidate);
    if (r.regular) return candidate.with_regularity(Regularity::kRegular);
    std::snprintf(buf, sizeof(buf), "%s%.4g", i ? "," : "", r.worst_ratio);
    ratios += buf;
  }
  throw Error(ErrorKind::kSearchFailure,
              "no regular width in [rho/2, rho] for " + b.descriptor() +
                  "; worst ratios: " + ratios);
}

BohrSet bohr_join(const BohrSet& b, std::span<const Index> delta, double width_new) {
  if (!(width_new > 0.0)) throw Error(ErrorKind::kDomain, "join width must be positive");
  const Group& g = b.group();
  const std::size_t n = g.order();
  std::vector<Index> freqs(b.freqs().begin(), b.freqs().end());
  std::vector<double> widths = b.widths();
  if (delta.empty()) return b;
  bool changed = false;
  for (Index r : delta) {
    if (!g.contains(r)) throw Error(ErrorKind::kGroupMismatch, "frequency not in group");
    if (r == 0) continue;
    const Index mirror = static_cast<Index>(n - r);
    bool merged = false;
    for (std::size_t j = 0; j < freqs.size(); ++j) {
      if (freqs[j] == r || freqs[j] == mirror) {
        if (width_new < widths[j]) {
          widths[j] = width_new;
          changed = true;
        }
        merged = true;
        break;
      }
    }
    if (!merged) {
      freqs.push_back(std::min(r, mirror));
      widths.push_back(width_new);
      changed = true;
    }
  }
  if (!changed) return b;
  return BohrSet(g, std::move(freqs), std::move(widths));
}

BohrSet dilate(const BohrSet& b, std::int64_t k) {
  const Group& g = b.group();
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) {
    throw Error(ErrorKind::kInvalidDilate,
                "dilate factor " + std::to_string(k) + " is not coprime to " +
                    std::to_string(n));
  }
  if (n == 1) return b;
  const std::int64_t kinv = inverse_mod(kk, n);
  auto base = std::make_shared<BohrSet::Base>(BohrSet::Base{g, {}, {}, {}, {}});
  std::vector<std::pair<Index, double>> fw;
  for (std::size_t j = 0; j < b.rank(); ++j) {
    fw.emplace_back(static_cast<Index>(b.freqs()[j] * kinv % n),
                    b.base_->widths[j]);
  }
  std::sort(fw.begin(), fw.end());
  for (const auto& [f, w] : fw) {
    base->freqs.push_back(f);
    base->widths.push_back(w);
  }
  base->profile.assign(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t x = 0; x < n; ++x) {
    base->profile[static_cast<std::size_t>(kk * x % n)] = b.base_->profile[x];
  }
  base->sorted_profile = b.base_->sorted_profile;
  return BohrSet(std::move(base), b.scale(), b.regularity());
}

}  // namespace aplab
