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

#include "qrss/shamir/shamir.h"

#include <string>

#include "qrss/error.h"

namespace qrss::shamir {
namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// Fermat inverse; p is prime and a != 0 mod p.
u64 inverse_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

void check_field(int t, FieldElement prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  }
  if (t < 1 || static_cast<u64>(prime) <= static_cast<u64>(t)) {
    throw Error(ErrorCode::FieldTooSmall,
                "field of size " + std::to_string(prime) + " cannot hold " +
                    std::to_string(t) + " distinct nonzero points");
  }
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<IndicatorShare> share_bit(int bit, int t, FieldElement prime,
                                      Rng& rng, int round) {
  if (bit != 0 && bit != 1) {
    throw Error(ErrorCode::NotABit, "cannot share value " + std::to_string(bit));
  }
  check_field(t, prime);
  std::uniform_int_distribution<u64> coeff(0, prime - 1);
  std::vector<u64> poly(static_cast<std::size_t>(t));
  poly[0] = static_cast<u64>(bit);
  for (int i = 1; i < t; ++i) poly[i] = coeff(rng);

  std::vector<IndicatorShare> shares;
  shares.reserve(poly.size());
  for (int holder = 1; holder <= t; ++holder) {
    const u64 x = static_cast<u64>(holder);
    u64 y = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      y = (mul_mod(y, x, prime) + *it) % prime;  // Horner
    }
    shares.push_back({holder, static_cast<FieldElement>(x),
                      static_cast<FieldElement>(y), round});
  }
  return shares;
}

FieldElement interpolate_at_zero(std::span<const IndicatorShare> shares,
                                 FieldElement prime) {
  const u64 p = prime;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (shares[i].x % p == 0) {
      throw Error(ErrorCode::DuplicatePoint, "share evaluated at x = 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (shares[i].x % p == shares[j].x % p) {
        throw Error(ErrorCode::DuplicatePoint,
                    "two shares at x = " + std::to_string(shares[i].x));
      }
    }
  }
  u64 acc = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    // L_i(0) = prod_{j != i} x_j / (x_j - x_i)
    u64 num = 1;
    u64 den = 1;
    for (std::size_t j = 0; j < shares.size(); ++j) {
      if (j == i) continue;
      num = mul_mod(num, shares[j].x % p, p);
      den = mul_mod(den, (shares[j].x % p + p - shares[i].x % p) % p, p);
    }
    const u64 basis = mul_mod(num, inverse_mod(den, p), p);
    acc = (acc + mul_mod(shares[i].y % p, basis, p)) % p;
  }
  return static_cast<FieldElement>(acc);
}

int reconstruct_bit(std::span<const IndicatorShare> shares, int t,
                    FieldElement prime) {
  check_field(t, prime);
  if (shares.size() != static_cast<std::size_t>(t)) {
    throw Error(ErrorCode::InsufficientShares,
                "need exactly " + std::to_string(t) + " shares, got " +
                    std::to_string(shares.size()));
  }
  const FieldElement value = interpolate_at_zero(shares, prime);
  if (value > 1) {
    throw Error(ErrorCode::NotABit,
                "interpolated constant " + std::to_string(value) + " is not a bit");
  }
  return static_cast<int>(value);
}

}  // namespace qrss::shamir
