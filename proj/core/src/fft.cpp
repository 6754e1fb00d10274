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

#include "fft.hpp"

#include <array>
#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>

#include "aplab/group.hpp"

namespace aplab::detail {
namespace {

constexpr std::size_t kDirectLimit = 32;

}  // namespace

FftPlan::FftPlan(std::size_t length) : length_(length) {
  if (length <= 1) {
    method_ = Method::kTrivial;
    return;
  }
  if (std::has_single_bit(length)) {
    method_ = Method::kRadix2;
    roots_.resize(length / 2);
    for (std::size_t j = 0; j < length / 2; ++j) roots_[j] = unit_root(j, length);
    bitrev_.resize(length);
    const int bits = std::countr_zero(length);
    for (std::size_t i = 0; i < length; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    return;
  }
  if (length <= kDirectLimit) {
    method_ = Method::kDirect;
    roots_.resize(length);
    for (std::size_t j = 0; j < length; ++j) roots_[j] = unit_root(j, length);
    return;
  }
  method_ = Method::kBluestein;
  const std::size_t m = length;
  const std::size_t padded = std::bit_ceil(2 * m - 1);
  inner_ = std::make_unique<FftPlan>(padded);
  chirp_.resize(m);
  const std::uint64_t two_m = 2 * static_cast<std::uint64_t>(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint64_t jj = static_cast<std::uint64_t>(j) * j % two_m;
    chirp_[j] = std::conj(unit_root(jj, two_m));
  }
  // Kernel for the forward sign is conj(chirp); the inverse kernel is its
  // conjugate, whose transform follows by symmetry (see bluestein()).
  chirp_hat_fwd_.assign(padded, cplx{});
  chirp_hat_fwd_[0] = std::conj(chirp_[0]);
  for (std::size_t l = 1; l < m; ++l) {
    chirp_hat_fwd_[l] = std::conj(chirp_[l]);
    chirp_hat_fwd_[padded - l] = std::conj(chirp_[l]);
  }
  inner_->execute(chirp_hat_fwd_, -1);
}

void FftPlan::execute(std::span<cplx> data, int sign) const {
  switch (method_) {
    case Method::kTrivial: return;
    case Method::kRadix2: radix2(data, sign); return;
    case Method::kDirect: direct(data, sign); return;
    case Method::kBluestein: bluestein(data, sign); return;
  }
}

void FftPlan::radix2(std::span<cplx> a, int sign) const {
  const std::size_t m = length_;
  for (std::size_t i = 0; i < m; ++i) {
    if (i < bitrev_[i]) std::swap(a[i], a[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = m / len;
    for (std::size_t i = 0; i < m; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx w = sign > 0 ? roots_[j * step] : std::conj(roots_[j * step]);
        const cplx u = a[i + j];
        const cplx v = a[i + j + half] * w;
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

void FftPlan::direct(std::span<cplx> a, int sign) const {
  const std::size_t m = length_;
  std::array<cplx, kDirectLimit> out;
  for (std::size_t k = 0; k < m; ++k) {
    cplx acc{};
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const cplx w = sign > 0 ? roots_[idx] : std::conj(roots_[idx]);
      acc += a[j] * w;
      idx += k;
      if (idx >= m) idx -= m;
    }
    out[k] = acc;
  }
  std::copy(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(m), a.begin());
}

void FftPlan::bluestein(std::span<cplx> a, int sign) const {
  const std::size_t m = length_;
  const std::size_t padded = inner_->length();
  // c_j = exp(sign * pi i j^2 / m); chirp_ holds the forward-sign value.
  auto c = [&](std::size_t j) { return sign < 0 ? chirp_[j] : std::conj(chirp_[j]); };
  std::vector<cplx> work(padded, cplx{});
  for (std::size_t j = 0; j < m; ++j) work[j] = a[j] * c(j);
  if (sign < 0) {
    inner_->execute(work, -1);
    for (std::size_t i = 0; i < padded; ++i) work[i] *= chirp_hat_fwd_[i];
  } else {
    // Conjugating the data turns the +sign kernel into the -sign kernel.
    for (auto& v : work) v = std::conj(v);
    inner_->execute(work, -1);
    for (std::size_t i = 0; i < padded; ++i) work[i] *= chirp_hat_fwd_[i];
  }
  inner_->execute(work, +1);
  const double scale = 1.0 / static_cast<double>(padded);
  for (std::size_t k = 0; k < m; ++k) {
    cplx v = work[k] * scale;
    if (sign > 0) v = std::conj(v);
    a[k] = v * c(k);
  }
}

std::shared_ptr<const FftPlan> plan_for(std::size_t length) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::shared_ptr<const FftPlan>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[length];
  if (!slot) slot = std::make_shared<const FftPlan>(length);
  return slot;
}

void transform_group(std::span<cplx> data, std::size_t q, std::size_t n,
                     int sign) {
  if (n == 1) {
    plan_for(data.size())->execute(data, sign);
    return;
  }
  std::size_t stride = 1;
  if (q <= kDirectLimit) {
    // Short axes: out[k][.] = sum_j w^(jk) in[j][.], applied to whole
    // contiguous runs of length `stride` so the inner loop is unit-stride.
    std::vector<cplx> w(q);
    for (std::size_t j = 0; j < q; ++j) {
      w[j] = sign > 0 ? unit_root(j, q) : std::conj(unit_root(j, q));
    }
    std::vector<cplx> block_buf;
    for (std::size_t axis = 0; axis < n; ++axis) {
      const std::size_t block = stride * q;
      block_buf.resize(block);
      for (std::size_t outer = 0; outer < data.size(); outer += block) {
        cplx* src = data.data() + outer;
        std::fill(block_buf.begin(), block_buf.end(), cplx{});
        for (std::size_t k = 0; k < q; ++k) {
          cplx* dst = block_buf.data() + k * stride;
          std::size_t idx = 0;
          for (std::size_t j = 0; j < q; ++j) {
            const cplx wk = w[idx];
            const cplx* in = src + j * stride;
            for (std::size_t t = 0; t < stride; ++t) dst[t] += wk * in[t];
            idx += k;
            if (idx >= q) idx -= q;
          }
        }
        std::copy(block_buf.begin(), block_buf.end(), src);
      }
      stride = block;
    }
    return;
  }
  const auto plan = plan_for(q);
  std::vector<cplx> line(q);
  for (std::size_t axis = 0; axis < n; ++axis) {
    const std::size_t block = stride * q;
    for (std::size_t outer = 0; outer < data.size(); outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = outer + inner;
        for (std::size_t j = 0; j < q; ++j) line[j] = data[base + j * stride];
        plan->execute(line, sign);
        for (std::size_t j = 0; j < q; ++j) data[base + j * stride] = line[j];
      }
    }
    stride = block;
  }
}

}  // namespace aplab::detail
