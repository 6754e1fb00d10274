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

#include "aplab/ntt.hpp"

#include <bit>
#include <stdexcept>

namespace aplab::ntt {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kEpsilon = 0xffffffffULL;  // 2^64 mod p

std::uint64_t reduce128(u128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  const std::uint64_t hi_hi = hi >> 32;
  const std::uint64_t hi_lo = hi & kEpsilon;
  // x = lo + hi_lo * 2^64 + hi_hi * 2^96, with 2^64 = eps and 2^96 = -1.
  std::uint64_t t0 = lo - hi_hi;
  if (lo < hi_hi) t0 -= kEpsilon;
  const std::uint64_t t1 = hi_lo * kEpsilon;
  std::uint64_t res = t0 + t1;
  if (res < t1) res += kEpsilon;
  if (res >= kModulus) res -= kModulus;
  return res;
}

}  // namespace

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a || s >= kModulus) s -= kModulus;
  return s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + (kModulus - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce128(static_cast<u128>(a) * b);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

void transform(std::span<std::uint64_t> a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!std::has_single_bit(n) || std::countr_zero(n) > 32) {
    throw std::invalid_argument("ntt length must be a power of two <= 2^32");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint64_t> w;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t root = pow(kGenerator, (kModulus - 1) / len);
    if (inverse) root = pow(root, kModulus - 2);
    const std::size_t half = len / 2;
    w.assign(half, 1);
    for (std::size_t j = 1; j < half; ++j) w[j] = mul(w[j - 1], root);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = mul(a[i + j + half], w[j]);
        a[i + j] = add(u, v);
        a[i + j + half] = sub(u, v);
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow(n % kModulus, kModulus - 2);
    for (auto& v : a) v = mul(v, inv_n);
  }
}

std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a,
                                           std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cyclic_convolve needs equal lengths");
  }
  const std::size_t n = a.size();
  if (n == 0) return {};
  const std::size_t padded = std::bit_ceil(2 * n - 1);
  std::vector<std::uint64_t> fa(padded, 0);
  std::vector<std::uint64_t> fb(padded, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  transform(fa, false);
  transform(fb, false);
  for (std::size_t i = 0; i < padded; ++i) fa[i] = mul(fa[i], fb[i]);
  transform(fa, true);
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < 2 * n - 1; ++i) out[i % n] = add(out[i % n], fa[i]);
  return out;
}

}  // namespace aplab::ntt
