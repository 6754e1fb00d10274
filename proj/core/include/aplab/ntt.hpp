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

#include <cstdint>
#include <span>
#include <vector>

namespace aplab::ntt {

// Arithmetic modulo the Goldilocks prime p = 2^64 - 2^32 + 1, whose
// multiplicative group has 2-adicity 32.
inline constexpr std::uint64_t kModulus = 0xffffffff00000001ULL;
inline constexpr std::uint64_t kGenerator = 7;

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

/// In-place number-theoretic transform of power-of-two length.
void transform(std::span<std::uint64_t> data, bool inverse);

/// Exact cyclic convolution of non-negative integer sequences of equal length
/// N (any N), out[i] = sum_{j} a[j] * b[(i - j) mod N]. Each true output must
/// be below the modulus; for 0/1 inputs this holds for every N <= 2^32.
std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a,
                                           std::span<const std::uint64_t> b);

}  // namespace aplab::ntt
