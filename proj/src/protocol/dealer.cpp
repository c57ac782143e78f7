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

#include "qrss/protocol/dealer.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrss/error.h"

namespace qrss::protocol {
namespace {

std::string handle_string(const QubitHandle& h) {
  return std::string(h.kind == ShareKind::Secret ? "secret" : "indicator") +
         " round " + std::to_string(h.round) + " copy " + std::to_string(h.copy) +
         " position " + std::to_string(h.position);
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange,
                "gamma must lie in (0, 1), got " + std::to_string(gamma));
  }
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::SemiOffline: return "semi_offline";
    case Variant::OfflineClassicalIndicator: return "offline_classical";
    case Variant::OfflineQuantumIndicator: return "offline_quantum";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::SemiOffline, Variant::OfflineClassicalIndicator,
                    Variant::OfflineQuantumIndicator}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::ConfigInvalid, "unknown variant \"" + std::string(name) + "\"");
}

int sample_geometric(double gamma, Rng& rng) {
  check_gamma(gamma);
  const double u = uniform01(rng);
  const double k = std::ceil(std::log1p(-u) / std::log1p(-gamma));
  if (!(k >= 1.0)) return 1;
  return k > 1e9 ? 1000000000 : static_cast<int>(k);
}

// ---- SharePool -------------------------------------------------------------

SharePool::SharePool(std::shared_ptr<const css::CssCode> css,
                     css::Positions positions, int rounds)
    : css_(std::move(css)), positions_(std::move(positions)), rounds_(rounds) {
  copies_.resize(2 * static_cast<std::size_t>(rounds_) * positions_.size());
}

SharePool::Copy& SharePool::at(ShareKind kind, int round, int copy) {
  return const_cast<Copy&>(std::as_const(*this).at(kind, round, copy));
}

const SharePool::Copy& SharePool::at(ShareKind kind, int round, int copy) const {
  const int t = static_cast<int>(positions_.size());
  if (round < 1 || round > rounds_ || copy < 1 || copy > t) {
    throw Error(ErrorCode::IndexOutOfRange,
                "no copy " + std::to_string(copy) + " in round " + std::to_string(round));
  }
  const std::size_t k = kind == ShareKind::Secret ? 0 : 1;
  return copies_[(k * rounds_ + (round - 1)) * t + (copy - 1)];
}

int SharePool::slot_of(int position) const {
  const auto it = std::find(positions_.begin(), positions_.end(), position);
  if (it == positions_.end()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "position " + std::to_string(position) + " is not designated");
  }
  return static_cast<int>(it - positions_.begin());
}

void SharePool::add_copy(ShareKind kind, int round, int copy, SecretQubit payload) {
  Copy& c = at(kind, round, copy);
  c.payload = payload;
  c.present = true;
  c.holders.resize(positions_.size());
  for (std::size_t s = 0; s < positions_.size(); ++s) c.holders[s] = static_cast<int>(s) + 1;
}

int SharePool::holder(const QubitHandle& h) const {
  const Copy& c = at(h.kind, h.round, h.copy);
  if (!c.present) return 0;
  return c.holders[slot_of(h.position)];
}

bool SharePool::consumed(const QubitHandle& h) const {
  const Copy& c = at(h.kind, h.round, h.copy);
  return c.present && c.holders[slot_of(h.position)] == 0;
}

void SharePool::transfer(const QubitHandle& h, int from, int to) {
  Copy& c = at(h.kind, h.round, h.copy);
  if (!c.present) {
    throw Error(ErrorCode::NoCloningViolation, handle_string(h) + " was never dealt");
  }
  int& slot = c.holders[slot_of(h.position)];
  if (slot != from || from == 0) {
    throw Error(ErrorCode::NoCloningViolation,
                "player " + std::to_string(from) + " does not hold " + handle_string(h));
  }
  slot = to;
}

bool SharePool::holds_full_copy(ShareKind kind, int round, int copy, int player) const {
  const Copy& c = at(kind, round, copy);
  return c.present && player != 0 &&
         std::all_of(c.holders.begin(), c.holders.end(),
                     [player](int h) { return h == player; });
}

StateVector SharePool::consume_copy(ShareKind kind, int round, int copy, int player) {
  if (!holds_full_copy(kind, round, copy, player)) {
    throw Error(ErrorCode::NoCloningViolation,
                "player " + std::to_string(player) + " cannot consume " +
                    handle_string({kind, round, copy, positions_.front()}));
  }
  Copy& c = at(kind, round, copy);
  std::fill(c.holders.begin(), c.holders.end(), 0);
  return css::encode_secret(*css_, c.payload);
}

// ---- Dealer ----------------------------------------------------------------

Dealer::Dealer(DealerConfig config) : config_(std::move(config)) {
  check_gamma(config_.gamma);
  if (!config_.css) throw Error(ErrorCode::ConfigInvalid, "dealer has no code");
  const int t = config_.t();
  if (t < 2) {
    throw Error(ErrorCode::ConfigInvalid, "need at least two players");
  }
  if (t != config_.css->d()) {
    throw Error(ErrorCode::ConfigInvalid,
                "player count " + std::to_string(t) + " differs from threshold d = " +
                    std::to_string(config_.css->d()));
  }
  // The four states below span all 2x2 operators, so recovering each of them
  // on every branch pins the reconstruction map to the identity.
  const double h = 1.0 / std::sqrt(2.0);
  const SecretQubit probes[] = {SecretQubit::zero(), SecretQubit::one(),
                                {{h, 0.0}, {h, 0.0}}, {{h, 0.0}, {0.0, h}}};
  if (!css::is_authorized(*config_.css, config_.designated_positions, probes)) {
    throw Error(ErrorCode::NotAuthorized, "designated positions cannot reconstruct");
  }
  if (config_.variant == Variant::OfflineClassicalIndicator) {
    if (!shamir::is_prime(config_.field_prime)) {
      throw Error(ErrorCode::NotPrime,
                  std::to_string(config_.field_prime) + " is not prime");
    }
    if (config_.field_prime <= static_cast<shamir::FieldElement>(t)) {
      throw Error(ErrorCode::FieldTooSmall, "field must exceed the player count");
    }
  }
  for (const auto& fixed : {config_.fixed_r, config_.fixed_w}) {
    if (fixed && *fixed < 1) {
      throw Error(ErrorCode::ConfigInvalid, "fixed r and w must be at least 1");
    }
  }
}

Deal Dealer::deal(Rng& rng) const {
  const int t = config_.t();
  Deal d;
  d.variant = config_.variant;
  d.t = t;
  d.css = config_.css;
  d.positions = config_.designated_positions;
  d.field_prime = config_.field_prime;
  d.r = config_.fixed_r ? *config_.fixed_r : sample_geometric(config_.gamma, rng);
  d.w = config_.fixed_w ? *config_.fixed_w : sample_geometric(config_.gamma, rng);
  const int rounds = d.rounds();

  d.truth.reserve(rounds);
  for (int j = 1; j <= rounds; ++j) {
    d.truth.push_back(j == d.r ? config_.secret : SecretQubit::haar(rng));
  }
  d.pool = SharePool(d.css, d.positions, rounds);
  d.lists.resize(t);
  for (int i = 1; i <= t; ++i) {
    d.lists[i - 1].owner = i;
    d.lists[i - 1].elements.reserve(static_cast<std::size_t>(t) * rounds);
  }

  const bool offline = is_offline(d.variant);
  if (offline) {
    d.indicator_bits.resize(rounds);
    for (int j = 1; j <= rounds; ++j) d.indicator_bits[j - 1] = j == d.r + 1 ? 1 : 0;
  }
  for (int j = 1; j <= rounds; ++j) {
    for (int c = 1; c <= t; ++c) {
      d.pool.add_copy(ShareKind::Secret, j, c, d.truth[j - 1]);
      std::vector<shamir::IndicatorShare> shares;
      if (d.variant == Variant::OfflineClassicalIndicator) {
        shares = shamir::share_bit(d.indicator_bits[j - 1], t, d.field_prime, rng, j);
      } else if (d.variant == Variant::OfflineQuantumIndicator) {
        d.pool.add_copy(ShareKind::Indicator, j, c,
                        d.indicator_bits[j - 1] ? SecretQubit::one() : SecretQubit::zero());
      }
      for (int i = 1; i <= t; ++i) {
        ShareElement e;
        e.secret_share = {ShareKind::Secret, j, c, d.positions[i - 1]};
        if (!shares.empty()) e.indicator_share = shares[i - 1];
        if (d.variant == Variant::OfflineQuantumIndicator) {
          e.indicator_qubit = QubitHandle{ShareKind::Indicator, j, c, d.positions[i - 1]};
        }
        d.lists[i - 1].elements.push_back(e);
      }
    }
  }
  return d;
}

Deal generate_shares(const DealerConfig& config, Rng& rng) {
  return Dealer(config).deal(rng);
}

}  // namespace qrss::protocol
