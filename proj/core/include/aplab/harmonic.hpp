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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "aplab/group.hpp"

namespace aplab {

using cplx = std::complex<double>;

enum class Side { kPhysical, kFourier };

std::string_view to_string(Side side);

/// Dense complex-valued function on a group.
///
/// Physical side carries the normalized counting measure (inner products and
/// norms are expectations over G); the Fourier side carries counting measure
/// on the dual (plain sums over characters).
class GFunc {
 public:
  GFunc(Group group, Side side);
  GFunc(Group group, Side side, std::vector<cplx> values);

  static GFunc constant(const Group& group, cplx value);
  static GFunc from_real(const Group& group, std::span<const double> values);

  const Group& group() const { return group_; }
  Side side() const { return side_; }
  std::size_t size() const { return values_.size(); }

  cplx operator[](Index i) const { return values_[i]; }
  cplx& operator[](Index i) { return values_[i]; }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  GFunc& operator+=(const GFunc& other);
  GFunc& operator-=(const GFunc& other);
  GFunc& operator*=(cplx scalar);

 private:
  Group group_;
  Side side_;
  std::vector<cplx> values_;
};

GFunc operator-(GFunc a, const GFunc& b);
GFunc operator*(GFunc a, cplx scalar);

/// Characters whose coefficient magnitude is at least eta, sorted by
/// descending magnitude (ties by ascending index).
struct SpectrumSet {
  double threshold = 1.0;
  std::vector<Index> members;
  std::vector<double> magnitudes;

  bool contains(Index gamma) const;
  std::size_t size() const { return members.size(); }
};

/// Relative slack applied to spectrum thresholds; coefficients computed in
/// floating point that equal the threshold exactly in exact arithmetic (e.g.
/// subgroup measures with 0/1 coefficients) must still qualify.
inline constexpr double kSpectrumSlack = 1e-12;

GFunc dft(const GFunc& f);
GFunc idft(const GFunc& f_hat);

/// f * g (x) = E_y f(y) g(x - y).
GFunc convolve(const GFunc& f, const GFunc& g);
/// f o g (x) = E_y f(x + y) conj(g(y)).
GFunc diff_convolve(const GFunc& f, const GFunc& g);
/// k-fold convolution f * ... * f, k >= 1.
GFunc iter_convolve(const GFunc& f, int k);
/// (tau_t f)(x) = f(x + t).
GFunc translate(const GFunc& f, Index t);
/// x -> conj(f(-x)).
GFunc reflect_conj(const GFunc& f);

SpectrumSet spectrum(const GFunc& f, double eta);
SpectrumSet spectrum_of_transform(const GFunc& f_hat, double eta);

/// (E_x mu(x) |f(x)|^p)^{1/p}; mu must be a non-negative probability
/// density (E mu = 1).
double weighted_norm(const GFunc& f, int p, const GFunc& mu);

/// sum_gamma |f^(gamma)|.
double l1_fourier(const GFunc& f);

/// <f, g> = E_x f(x) conj(g(x)).
cplx inner(const GFunc& f, const GFunc& g);
double sup_norm(const GFunc& f);
/// E_x |f(x)|^p raised to 1/p (p >= 1).
double lp_norm(const GFunc& f, int p);
double max_abs_diff(const GFunc& f, const GFunc& g);

/// GFunc text file: `gfunc <group> <side>` then `index re im` per line.
void write_gfunc(std::ostream& out, const GFunc& f);
GFunc read_gfunc(std::istream& in);

}  // namespace aplab
