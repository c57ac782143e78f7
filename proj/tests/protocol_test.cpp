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
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "qrss/error.h"
#include "qrss/protocol/dealer.h"
#include "qrss/protocol/engine.h"

namespace qrss::protocol {
namespace {

using gf2::BinaryMatrix;
using gf2::LinearCode;

std::shared_ptr<const css::CssCode> steane() {
  static const auto code = [] {
    const std::vector<int> order{1, 2, 7, 4, 3, 6, 5};
    const LinearCode c(BinaryMatrix::from_strings({"1000011", "0100101", "0010110", "0001111"}));
    const LinearCode c1(BinaryMatrix::from_strings({"0001111", "0110011", "1010101"}));
    return std::make_shared<const css::CssCode>(
        css::build_css(c.permute_columns(order), c1.permute_columns(order)));
  }();
  return code;
}

DealerConfig config(Variant v, int r, int w) {
  DealerConfig c;
  c.gamma = 0.25;
  c.secret = SecretQubit{{0.6, 0.0}, {0.0, 0.8}};
  c.css = steane();
  c.designated_positions = {5, 6, 7};
  c.variant = v;
  c.fixed_r = r;
  c.fixed_w = w;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ConfigInvalid;
}

Transcript play(const DealerConfig& c, std::vector<Strategy> s, std::uint64_t seed = 1) {
  Rng rng = make_rng(seed);
  Deal deal = Dealer(c).deal(rng);
  return run_game(deal, s, rng);
}

const std::vector<Strategy> kHonest(3, Honest{});

TEST(Geometric, MeanAndEdges) {
  Rng rng = make_rng(21);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = sample_geometric(0.25, rng);
    ASSERT_GE(k, 1);
    sum += k;
  }
  // sd of the mean: sqrt((1 - g) / g^2 / n) ~ 0.011.
  EXPECT_NEAR(sum / n, 4.0, 0.04);
  int ones = 0;
  for (int i = 0; i < 1000; ++i) ones += sample_geometric(0.999, rng) == 1;
  EXPECT_GE(ones, 990);
  EXPECT_EQ(code_of([&] { sample_geometric(0.0, rng); }), ErrorCode::GammaOutOfRange);
  EXPECT_EQ(code_of([&] { sample_geometric(1.0, rng); }), ErrorCode::GammaOutOfRange);
}

TEST(Variant, Names) {
  EXPECT_EQ(parse_variant("semi_offline"), Variant::SemiOffline);
  EXPECT_EQ(parse_variant("offline_classical"), Variant::OfflineClassicalIndicator);
  EXPECT_EQ(parse_variant("offline_quantum"), Variant::OfflineQuantumIndicator);
  EXPECT_EQ(to_string(Variant::SemiOffline), "semi_offline");
  EXPECT_EQ(code_of([] { parse_variant("online"); }), ErrorCode::ConfigInvalid);
}

TEST(Dealer, ListLengths) {
  Rng rng = make_rng(22);
  const Deal d = generate_shares(config(Variant::SemiOffline, 2, 1), rng);
  EXPECT_EQ(d.r, 2);
  EXPECT_EQ(d.w, 1);
  ASSERT_EQ(d.lists.size(), 3u);
  for (int p = 1; p <= 3; ++p) {
    const auto& list = d.lists[p - 1];
    EXPECT_EQ(list.owner, p);
    ASSERT_EQ(list.elements.size(), 9u);
    for (std::size_t e = 0; e < 9; ++e) {
      const auto& h = list.elements[e].secret_share;
      EXPECT_EQ(h.round, static_cast<int>(e) / 3 + 1);
      EXPECT_EQ(h.copy, static_cast<int>(e) % 3 + 1);
      EXPECT_EQ(h.position, d.positions[p - 1]);
      EXPECT_EQ(d.pool.holder(h), p);
      EXPECT_FALSE(list.elements[e].indicator_share.has_value());
    }
  }
  ASSERT_EQ(d.truth.size(), 3u);
  EXPECT_NEAR(quantum::fidelity(d.secret(), config(Variant::SemiOffline, 2, 1).secret), 1.0,
              1e-15);
}

TEST(Dealer, FakesDifferFromSecret) {
  Rng rng = make_rng(23);
  const Deal d = generate_shares(config(Variant::SemiOffline, 4, 2), rng);
  for (int j = 1; j <= d.rounds(); ++j) {
    const double f = quantum::fidelity(d.truth[j - 1], d.secret());
    if (j == d.r) {
      EXPECT_NEAR(f, 1.0, 1e-15);
    } else {
      EXPECT_LT(f, css::kRecoveryFidelity);
    }
  }
}

TEST(Dealer, ClassicalIndicatorPlacement) {
  Rng rng = make_rng(24);
  const auto c = config(Variant::OfflineClassicalIndicator, 2, 2);
  const Deal d = generate_shares(c, rng);
  EXPECT_EQ(d.indicator_bits, (std::vector<int>{0, 0, 1, 0}));
  for (int j = 1; j <= d.rounds(); ++j) {
    for (int copy = 1; copy <= 3; ++copy) {
      std::vector<shamir::IndicatorShare> shares;
      for (const auto& list : d.lists) {
        const auto& e = list.elements[(j - 1) * 3 + copy - 1];
        ASSERT_TRUE(e.indicator_share.has_value());
        shares.push_back(*e.indicator_share);
      }
      EXPECT_EQ(shamir::reconstruct_bit(shares, 3, c.field_prime), j == 3 ? 1 : 0);
    }
  }
}

TEST(Dealer, QuantumIndicatorQubits) {
  Rng rng = make_rng(25);
  const Deal d = generate_shares(config(Variant::OfflineQuantumIndicator, 1, 1), rng);
  EXPECT_EQ(d.indicator_bits, (std::vector<int>{0, 1}));
  for (const auto& list : d.lists) {
    for (const auto& e : list.elements) {
      ASSERT_TRUE(e.indicator_qubit.has_value());
      EXPECT_EQ(e.indicator_qubit->kind, ShareKind::Indicator);
      EXPECT_EQ(d.pool.holder(*e.indicator_qubit), list.owner);
    }
  }
}

TEST(Dealer, Validation) {
  auto c = config(Variant::SemiOffline, 1, 1);
  c.designated_positions = {1, 2, 3};
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::NotAuthorized);
  c.designated_positions = {5, 6};
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::ConfigInvalid);
  c = config(Variant::SemiOffline, 1, 1);
  c.gamma = 1.5;
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::GammaOutOfRange);
  c = config(Variant::OfflineClassicalIndicator, 1, 1);
  c.field_prime = 3;
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::FieldTooSmall);
  c.field_prime = 15;
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::NotPrime);
  c = config(Variant::SemiOffline, 0, 1);
  EXPECT_EQ(code_of([&] { Dealer d(c); }), ErrorCode::ConfigInvalid);
}

TEST(SharePool, NoCloning) {
  Rng rng = make_rng(26);
  Deal d = generate_shares(config(Variant::SemiOffline, 1, 1), rng);
  const QubitHandle h{ShareKind::Secret, 1, 1, 6};
  EXPECT_EQ(code_of([&] { d.pool.transfer(h, 1, 3); }), ErrorCode::NoCloningViolation);
  EXPECT_EQ(code_of([&] { d.pool.consume_copy(ShareKind::Secret, 1, 1, 1); }),
            ErrorCode::NoCloningViolation);
  d.pool.transfer(h, 2, 1);
  d.pool.transfer({ShareKind::Secret, 1, 1, 7}, 3, 1);
  EXPECT_TRUE(d.pool.holds_full_copy(ShareKind::Secret, 1, 1, 1));
  const auto state = d.pool.consume_copy(ShareKind::Secret, 1, 1, 1);
  EXPECT_EQ(state.num_qubits(), 7);
  EXPECT_TRUE(d.pool.consumed(h));
  EXPECT_EQ(code_of([&] { d.pool.consume_copy(ShareKind::Secret, 1, 1, 1); }),
            ErrorCode::NoCloningViolation);
  EXPECT_EQ(code_of([&] { d.pool.transfer(h, 1, 2); }), ErrorCode::NoCloningViolation);
}

TEST(Engine, HonestSemiOffline) {
  const auto c = config(Variant::SemiOffline, 2, 1);
  const auto tx = play(c, kHonest);
  EXPECT_TRUE(tx.complete);
  EXPECT_EQ(tx.end, EndReason::Announced);
  EXPECT_EQ(tx.last_round, 3);
  EXPECT_EQ(tx.announcement, Announcement::RevealR);
  EXPECT_EQ(tx.announced_r, 2);
  EXPECT_EQ(tx.signals, (std::vector<std::optional<int>>{1, 1, 1}));
  EXPECT_EQ(tx.reconstructions.size(), 9u);
  for (const auto& r : tx.reconstructions) EXPECT_GE(r.fidelity, css::kRecoveryFidelity);
  for (const auto& d : tx.deliveries) EXPECT_TRUE(d.delivered);
  EXPECT_EQ(tx.deliveries.size(), 3u * 3u * 2u);
  for (const auto& o : tx.outputs) {
    EXPECT_EQ(o.kind, OutputKind::Confirmed);
    EXPECT_EQ(o.round, 2);
  }
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Secret, Outcome::Secret, Outcome::Secret}));
}

TEST(Engine, EarlyQuitAbortsSemiOffline) {
  const auto c = config(Variant::SemiOffline, 2, 1);
  const std::vector<Strategy> s{QuitAt{1, 2}, Honest{}, Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.end, EndReason::DealerAbort);
  EXPECT_EQ(tx.last_round, 1);
  EXPECT_EQ(tx.announcement, Announcement::Abort);
  ASSERT_TRUE(tx.signals[1].has_value());
  EXPECT_EQ(*tx.signals[1], 0);
  ASSERT_TRUE(tx.first_quit().has_value());
  EXPECT_EQ(tx.first_quit()->player, 1);
  EXPECT_FALSE(tx.first_quit()->by_protocol);
  // P1 keeps its round-1 guess, which is a fake here (r = 2).
  EXPECT_EQ(tx.outputs[0].kind, OutputKind::Guess);
  EXPECT_EQ(tx.outputs[1].kind, OutputKind::None);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Bot, Outcome::Bot, Outcome::Bot}));
}

TEST(Engine, QuitInRevelationRoundKeepsSecret) {
  const auto c = config(Variant::SemiOffline, 1, 2);
  const std::vector<Strategy> s{Honest{}, quit_after_own_subround(2, 1), Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.end, EndReason::DealerAbort);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Bot, Outcome::Secret, Outcome::Bot}));
}

TEST(Engine, QuitAfterRevelationGivesEveryoneSecret) {
  const auto c = config(Variant::SemiOffline, 1, 2);
  const std::vector<Strategy> s{quit_after_own_subround(1, 2), Honest{}, Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.end, EndReason::DealerAbort);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Secret, Outcome::Secret, Outcome::Secret}));
}

TEST(Engine, HonestOfflineEndsAtRoundAfterRevelation) {
  for (Variant v : {Variant::OfflineClassicalIndicator, Variant::OfflineQuantumIndicator}) {
    const auto c = config(v, 3, 2);
    const auto tx = play(c, kHonest);
    EXPECT_EQ(tx.last_round, 4) << to_string(v);
    EXPECT_EQ(tx.end, EndReason::QuitDetected);
    ASSERT_TRUE(tx.first_quit().has_value());
    EXPECT_EQ(tx.first_quit()->player, 1);
    EXPECT_EQ(tx.first_quit()->round, 4);
    EXPECT_TRUE(tx.first_quit()->by_protocol);
    ASSERT_FALSE(tx.indicators.empty());
    EXPECT_EQ(tx.indicators.back().value, 1);
    for (const auto& o : tx.outputs) {
      EXPECT_EQ(o.kind, OutputKind::Confirmed);
      EXPECT_EQ(o.round, 3);
    }
    EXPECT_EQ(classify_outcomes(tx, c.secret),
              (std::vector<Outcome>{Outcome::Secret, Outcome::Secret, Outcome::Secret}));
  }
}

TEST(Engine, OfflineEarlyQuitLeavesOthersWithFake) {
  const auto c = config(Variant::OfflineClassicalIndicator, 3, 1);
  const std::vector<Strategy> s{Honest{}, quit_after_own_subround(2, 2), Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.last_round, 2);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Fake, Outcome::Bot, Outcome::Fake}));
}

TEST(Engine, OfflineFirstRoundQuitGivesNothing) {
  const auto c = config(Variant::OfflineQuantumIndicator, 2, 1);
  const std::vector<Strategy> s{quit_after_own_subround(1, 1), Honest{}, Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.outputs[1].kind, OutputKind::None);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Bot, Outcome::Bot, Outcome::Bot}));
}

TEST(Engine, GuessAndQuitAlwaysQuitsInRoundOne) {
  const auto c = config(Variant::SemiOffline, 1, 1);
  const std::vector<Strategy> s{GuessAndQuit{1.0}, Honest{}, Honest{}};
  const auto tx = play(c, s);
  EXPECT_EQ(tx.last_round, 1);
  EXPECT_EQ(classify_outcomes(tx, c.secret),
            (std::vector<Outcome>{Outcome::Secret, Outcome::Bot, Outcome::Bot}));
}

TEST(Engine, Validation) {
  const auto c = config(Variant::SemiOffline, 1, 1);
  EXPECT_EQ(code_of([&] { play(c, {QuitAt{1, 5}, Honest{}, Honest{}}); }),
            ErrorCode::ConfigInvalid);
  EXPECT_EQ(code_of([&] { play(c, {GuessAndQuit{1.5}, Honest{}, Honest{}}); }),
            ErrorCode::ConfigInvalid);
  EXPECT_EQ(code_of([&] { classify_outcomes(Transcript{}, c.secret); }),
            ErrorCode::IncompleteTranscript);
}

TEST(Engine, SameSeedSameTranscript) {
  DealerConfig c = config(Variant::OfflineQuantumIndicator, 1, 1);
  c.fixed_r.reset();
  c.fixed_w.reset();
  const std::vector<Strategy> s{Honest{}, GuessAndQuit{0.3}, Honest{}};
  const auto a = play(c, s, 99);
  const auto b = play(c, s, 99);
  ASSERT_EQ(a.reconstructions.size(), b.reconstructions.size());
  for (std::size_t i = 0; i < a.reconstructions.size(); ++i) {
    EXPECT_EQ(a.reconstructions[i].outcome, b.reconstructions[i].outcome);
  }
  EXPECT_EQ(a.r, b.r);
  EXPECT_EQ(a.last_round, b.last_round);
  EXPECT_EQ(describe(s[1]), describe(GuessAndQuit{0.3}));
}

}  // namespace
}  // namespace qrss::protocol
