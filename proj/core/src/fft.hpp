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
#include <memory>
#include <span>
#include <vector>

namespace aplab::detail {

using cplx = std::complex<double>;

// Unnormalized length-m DFT: out_k = sum_j in_j exp(sign * 2 pi i j k / m).
// Power-of-two lengths use iterative radix-2, short lengths a direct sum over
// an exact root table, everything else Bluestein over a power-of-two FFT.
class FftPlan {
 public:
  explicit FftPlan(std::size_t length);

  std::size_t length() const { return length_; }

  // In-place; `data.size()` must equal length(). sign is -1 (forward) or +1.
  void execute(std::span<cplx> data, int sign) const;

 private:
  void radix2(std::span<cplx> data, int sign) const;
  void direct(std::span<cplx> data, int sign) const;
  void bluestein(std::span<cplx> data, int sign) const;

  std::size_t length_;
  enum class Method { kTrivial, kRadix2, kDirect, kBluestein } method_;
  std::vector<cplx> roots_;          // exp(2 pi i j / length) or pow2 roots
  std::vector<std::size_t> bitrev_;
  std::unique_ptr<FftPlan> inner_;   // power-of-two plan for Bluestein
  std::vector<cplx> chirp_;          // exp(-pi i j^2 / length)
  std::vector<cplx> chirp_hat_fwd_;  // transformed conj chirp, forward sign
};

// Shared plan cache; plans are immutable once built.
std::shared_ptr<const FftPlan> plan_for(std::size_t length);

// Multidimensional transform over F_q^n (axis length q, n axes) or a single
// axis of length N; unnormalized, in place.
void transform_group(std::span<cplx> data, std::size_t q, std::size_t n,
                     int sign);

}  // namespace aplab::detail
