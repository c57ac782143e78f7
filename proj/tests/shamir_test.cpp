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

#include <functional>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "qrss/error.h"
#include "qrss/shamir/shamir.h"

namespace qrss::shamir {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ConfigInvalid;
}

TEST(Shamir, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_TRUE(is_prime(251));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(249));
}

TEST(Shamir, SingleShareIsTheBit) {
  Rng rng = make_rng(1);
  const auto s = share_bit(0, 1, 251, rng);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].y, 0u);
  EXPECT_EQ(s[0].x, 1u);
}

TEST(Shamir, RoundTrip) {
  Rng rng = make_rng(2);
  for (int t = 1; t <= 5; ++t) {
    for (int b = 0; b <= 1; ++b) {
      for (int rep = 0; rep < 50; ++rep) {
        const auto s = share_bit(b, t, 251, rng, 4);
        ASSERT_EQ(static_cast<int>(s.size()), t);
        for (int i = 0; i < t; ++i) {
          EXPECT_EQ(s[i].holder, i + 1);
          EXPECT_EQ(s[i].round, 4);
        }
        EXPECT_EQ(reconstruct_bit(s, t, 251), b);
      }
    }
  }
}

TEST(Shamir, Errors) {
  Rng rng = make_rng(3);
  EXPECT_EQ(code_of([&] { share_bit(1, 3, 3, rng); }), ErrorCode::FieldTooSmall);
  EXPECT_EQ(code_of([&] { share_bit(1, 3, 9, rng); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([&] { share_bit(2, 3, 251, rng); }), ErrorCode::NotABit);
  const auto s = share_bit(1, 3, 251, rng);
  const std::vector<IndicatorShare> two(s.begin(), s.begin() + 2);
  EXPECT_EQ(code_of([&] { reconstruct_bit(two, 3, 251); }), ErrorCode::InsufficientShares);
  const std::vector<IndicatorShare> dup{s[0], s[0], s[1]};
  EXPECT_EQ(code_of([&] { reconstruct_bit(dup, 3, 251); }), ErrorCode::DuplicatePoint);
  std::vector<IndicatorShare> wrong = s;
  wrong[0].y = (wrong[0].y + 1) % 251;
  EXPECT_EQ(code_of([&] { reconstruct_bit(wrong, 3, 251); }), ErrorCode::NotABit);
}

// Over GF(7), every polynomial of degree < t is enumerated. Any t - 1 shares
// must have the same distribution for b = 0 and b = 1.
TEST(Shamir, PerfectSecrecyOverGf7) {
  constexpr FieldElement p = 7;
  for (int t = 2; t <= 4; ++t) {
    std::map<std::vector<FieldElement>, int> counts[2];
    int polys = 1;
    for (int i = 1; i < t; ++i) polys *= static_cast<int>(p);
    for (int b = 0; b <= 1; ++b) {
      for (int idx = 0; idx < polys; ++idx) {
        std::vector<FieldElement> coef{static_cast<FieldElement>(b)};
        for (int k = idx, i = 1; i < t; ++i, k /= static_cast<int>(p)) {
          coef.push_back(static_cast<FieldElement>(k % p));
        }
        std::vector<IndicatorShare> shares;
        for (int x = 1; x <= t; ++x) {
          FieldElement y = 0;
          for (auto c = coef.rbegin(); c != coef.rend(); ++c) y = (y * x + *c) % p;
          shares.push_back({x, static_cast<FieldElement>(x), y, 0});
        }
        EXPECT_EQ(reconstruct_bit(shares, t, p), b);
        // Each (t-1)-subset: drop one holder.
        for (int drop = 0; drop < t; ++drop) {
          std::vector<FieldElement> view{static_cast<FieldElement>(drop)};
          for (int i = 0; i < t; ++i) {
            if (i != drop) view.push_back(shares[i].y);
          }
          ++counts[b][view];
        }
      }
    }
    EXPECT_EQ(counts[0], counts[1]) << "t = " << t;
    // Uniform as well: every view appears exactly once per dropped holder.
    for (const auto& [view, n] : counts[0]) EXPECT_EQ(n, 1);
  }
}

}  // namespace
}  // namespace qrss::shamir
