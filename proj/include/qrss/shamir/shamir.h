// Copyright 2026 The QRSS Authors
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

// (t, t) Shamir sharing of a single bit over a prime field. Used for the
// per-round "previous round was the revelation round" indicator.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrss/random.h"

namespace qrss::shamir {

using FieldElement = std::uint32_t;

inline constexpr FieldElement kDefaultPrime = 251;

struct IndicatorShare {
  int holder = 0;      // 1-based player index
  FieldElement x = 0;  // evaluation point, never 0
  FieldElement y = 0;
  int round = 0;

  friend bool operator==(const IndicatorShare&, const IndicatorShare&) = default;
};

bool is_prime(std::uint64_t p);

/// Random degree t-1 polynomial with constant term `bit`, evaluated at
/// x = 1..t; share i goes to holder i. Throws FieldTooSmall if prime <= t,
/// NotPrime if `prime` is composite, NotABit if bit > 1.
std::vector<IndicatorShare> share_bit(int bit, int t, FieldElement prime,
                                      Rng& rng, int round = 0);

/// Lagrange interpolation at 0 from exactly t shares. Throws
/// InsufficientShares on a count other than t, DuplicatePoint on repeated x,
/// NotABit when the constant term is neither 0 nor 1.
int reconstruct_bit(std::span<const IndicatorShare> shares, int t,
                    FieldElement prime);

/// Constant term of the interpolating polynomial, without the bit check.
FieldElement interpolate_at_zero(std::span<const IndicatorShare> shares,
                                 FieldElement prime);

}  // namespace qrss::shamir
