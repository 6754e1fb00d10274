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

#include "aplab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "aplab/error.hpp"
#include "fft.hpp"

namespace aplab {
namespace {

void require_side(const GFunc& f, Side side, const char* op) {
  if (f.side() != side) {
    throw Error(ErrorKind::kContract,
                std::string(op) + " expects a " + std::string(to_string(side)) +
                    "-side function");
  }
}

GFunc raw_transform(const GFunc& f, Side out_side, int sign) {
  const Group& g = f.group();
  std::vector<cplx> data(f.values().begin(), f.values().end());
  if (g.is_vector_space()) {
    detail::transform_group(data, g.q(), g.n(), sign);
  } else {
    detail::transform_group(data, g.order(), 1, sign);
  }
  return GFunc(g, out_side, std::move(data));
}

}  // namespace

std::string_view to_string(Side side) {
  return side == Side::kPhysical ? "physical" : "fourier";
}

GFunc::GFunc(Group group, Side side)
    : group_(std::move(group)), side_(side), values_(group_.order()) {}

GFunc::GFunc(Group group, Side side, std::vector<cplx> values)
    : group_(std::move(group)), side_(side), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw Error(ErrorKind::kInvalidArgument,
                "function length does not match group order");
  }
}

GFunc GFunc::constant(const Group& group, cplx value) {
  return GFunc(group, Side::kPhysical, std::vector<cplx>(group.order(), value));
}

GFunc GFunc::from_real(const Group& group, std::span<const double> values) {
  std::vector<cplx> v(values.begin(), values.end());
  return GFunc(group, Side::kPhysical, std::move(v));
}

GFunc& GFunc::operator+=(const GFunc& other) {
  require_same_group(group_, other.group_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GFunc& GFunc::operator-=(const GFunc& other) {
  require_same_group(group_, other.group_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GFunc& GFunc::operator*=(cplx scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

GFunc operator-(GFunc a, const GFunc& b) {
  a -= b;
  return a;
}

GFunc operator*(GFunc a, cplx scalar) {
  a *= scalar;
  return a;
}

bool SpectrumSet::contains(Index gamma) const {
  return std::find(members.begin(), members.end(), gamma) != members.end();
}

GFunc dft(const GFunc& f) {
  require_side(f, Side::kPhysical, "dft");
  GFunc out = raw_transform(f, Side::kFourier, -1);
  out *= 1.0 / static_cast<double>(f.group().order());
  return out;
}

GFunc idft(const GFunc& f_hat) {
  require_side(f_hat, Side::kFourier, "idft");
  return raw_transform(f_hat, Side::kPhysical, +1);
}

GFunc convolve(const GFunc& f, const GFunc& g) {
  require_same_group(f.group(), g.group());
  require_side(f, Side::kPhysical, "convolve");
  require_side(g, Side::kPhysical, "convolve");
  GFunc fh = dft(f);
  const GFunc gh = dft(g);
  for (std::size_t i = 0; i < fh.size(); ++i) fh.values()[i] *= gh.values()[i];
  return idft(fh);
}

GFunc diff_convolve(const GFunc& f, const GFunc& g) {
  require_same_group(f.group(), g.group());
  require_side(f, Side::kPhysical, "diff_convolve");
  require_side(g, Side::kPhysical, "diff_convolve");
  GFunc fh = dft(f);
  const GFunc gh = dft(g);
  for (std::size_t i = 0; i < fh.size(); ++i) {
    fh.values()[i] *= std::conj(gh.values()[i]);
  }
  return idft(fh);
}

GFunc iter_convolve(const GFunc& f, int k) {
  require_side(f, Side::kPhysical, "iter_convolve");
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "iter_convolve needs k >= 1");
  if (k == 1) return f;
  GFunc fh = dft(f);
  for (auto& v : fh.values()) {
    cplx acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= v;
    v = acc;
  }
  return idft(fh);
}

GFunc translate(const GFunc& f, Index t) {
  const Group& g = f.group();
  if (!g.contains(t)) throw Error(ErrorKind::kGroupMismatch, "shift not in group");
  GFunc out(g, f.side());
  for (Index x = 0; x < g.order(); ++x) out[x] = f[g.add(x, t)];
  return out;
}

GFunc reflect_conj(const GFunc& f) {
  const Group& g = f.group();
  GFunc out(g, f.side());
  for (Index x = 0; x < g.order(); ++x) out[x] = std::conj(f[g.neg(x)]);
  return out;
}

SpectrumSet spectrum_of_transform(const GFunc& f_hat, double eta) {
  require_side(f_hat, Side::kFourier, "spectrum");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::kDomain, "spectrum threshold must lie in (0, 1]");
  }
  SpectrumSet s;
  s.threshold = eta;
  const double cut = eta * (1.0 - kSpectrumSlack);
  std::vector<std::pair<double, Index>> hits;
  for (Index i = 0; i < f_hat.size(); ++i) {
    const double m = std::abs(f_hat[i]);
    if (m >= cut) hits.emplace_back(m, i);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (const auto& [m, i] : hits) {
    s.members.push_back(i);
    s.magnitudes.push_back(m);
  }
  return s;
}

SpectrumSet spectrum(const GFunc& f, double eta) {
  return spectrum_of_transform(dft(f), eta);
}

double weighted_norm(const GFunc& f, int p, const GFunc& mu) {
  require_same_group(f.group(), mu.group());
  if (p < 1) throw Error(ErrorKind::kDomain, "weighted_norm needs p >= 1");
  double mass = 0.0;
  for (const auto& v : mu.values()) {
    if (std::abs(v.imag()) > 1e-9 || v.real() < -1e-12) {
      throw Error(ErrorKind::kContract, "weight is not a non-negative real function");
    }
    mass += v.real();
  }
  mass /= static_cast<double>(mu.size());
  if (std::abs(mass - 1.0) > 1e-9) {
    throw Error(ErrorKind::kContract, "weight is not a probability density");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc += std::max(mu.values()[i].real(), 0.0) * std::pow(std::abs(f.values()[i]), p);
  }
  acc /= static_cast<double>(f.size());
  return std::pow(acc, 1.0 / p);
}

double l1_fourier(const GFunc& f) {
  const GFunc fh = f.side() == Side::kPhysical ? dft(f) : f;
  double acc = 0.0;
  for (const auto& v : fh.values()) acc += std::abs(v);
  return acc;
}

cplx inner(const GFunc& f, const GFunc& g) {
  require_same_group(f.group(), g.group());
  cplx acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f.values()[i] * std::conj(g.values()[i]);
  return acc / static_cast<double>(f.size());
}

double sup_norm(const GFunc& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm(const GFunc& f, int p) {
  double acc = 0.0;
  for (const auto& v : f.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

double max_abs_diff(const GFunc& f, const GFunc& g) {
  require_same_group(f.group(), g.group());
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    m = std::max(m, std::abs(f.values()[i] - g.values()[i]));
  }
  return m;
}

void write_gfunc(std::ostream& out, const GFunc& f) {
  out << "gfunc " << f.group().descriptor() << ' ' << to_string(f.side()) << '\n';
  char buf[96];
  for (Index i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%u %.17g %.17g\n", i, f[i].real(), f[i].imag());
    out << buf;
  }
}

GFunc read_gfunc(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kFormat, "empty gfunc file");
  std::istringstream header(line);
  std::string tag, desc, side_text, extra;
  if (!(header >> tag >> desc >> side_text) || tag != "gfunc" || (header >> extra)) {
    throw Error(ErrorKind::kFormat, "bad gfunc header: '" + line + "'");
  }
  Side side;
  if (side_text == "physical") {
    side = Side::kPhysical;
  } else if (side_text == "fourier") {
    side = Side::kFourier;
  } else {
    throw Error(ErrorKind::kFormat, "bad gfunc side '" + side_text + "'");
  }
  const Group g = Group::parse(desc);
  std::vector<cplx> values(g.order());
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long long idx = -1;
    double re = 0.0, im = 0.0;
    if (!(row >> idx >> re >> im) || (row >> extra)) {
      throw Error(ErrorKind::kFormat, "bad gfunc line: '" + line + "'");
    }
    if (idx != static_cast<long long>(expected) || expected >= g.order()) {
      throw Error(ErrorKind::kFormat, "gfunc lines must list every index in order");
    }
    values[expected++] = {re, im};
  }
  if (expected != g.order()) {
    throw Error(ErrorKind::kFormat, "gfunc file is missing entries");
  }
  return GFunc(g, side, std::move(values));
}

}  // namespace aplab
