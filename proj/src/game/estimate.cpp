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

#include "qrss/game/estimate.h"

#include <cmath>
#include <string>

#include "qrss/error.h"

namespace qrss::game {

MonteCarloResult estimate_utilities_montecarlo(const protocol::Dealer& dealer,
                                               std::span<const Strategy> strategies,
                                               const UtilityProfile& profile,
                                               long trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::ConfigInvalid, "need at least one trial");
  const int t = dealer.config().t();
  std::vector<double> sum(t, 0.0);
  std::vector<double> sum_sq(t, 0.0);
  std::vector<long> secret(t, 0);
  MonteCarloResult res;
  res.trials = trials;
  res.fake_count.assign(t, 0);

  for (long k = 0; k < trials; ++k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    protocol::Deal deal = dealer.deal(rng);
    const protocol::Transcript tx = protocol::run_game(deal, strategies, rng);
    const auto outcomes = protocol::classify_outcomes(tx, deal.secret());
    const auto u = utilities_of(profile, outcomes);
    for (int p = 0; p < t; ++p) {
      sum[p] += u[p];
      sum_sq[p] += u[p] * u[p];
      secret[p] += outcomes[p] == Outcome::Secret;
      res.fake_count[p] += outcomes[p] == Outcome::Fake;
    }
  }
  const double n = static_cast<double>(trials);
  for (int p = 0; p < t; ++p) {
    const double mean = sum[p] / n;
    double var = 0.0;
    if (trials > 1) var = std::max(0.0, (sum_sq[p] - n * mean * mean) / (n - 1.0));
    res.utility.push_back({mean, std::sqrt(var / n)});
    res.p_secret.push_back(static_cast<double>(secret[p]) / n);
  }
  return res;
}

ExactResult expected_by_enumeration(const protocol::DealerConfig& config,
                                    std::span<const Strategy> strategies,
                                    const UtilityProfile& profile, int r_cap,
                                    std::uint64_t seed) {
  if (r_cap < 1) throw Error(ErrorCode::ConfigInvalid, "r_cap must be >= 1");
  const int t = config.t();
  ExactResult res;
  res.utility.assign(t, 0.0);
  res.p_secret.assign(t, 0.0);
  protocol::DealerConfig pinned = config;
  pinned.fixed_w = 1;
  for (int r = 1; r <= r_cap; ++r) {
    // Tail mass Pr[r >= r_cap] sits on the last game.
    const double weight = r < r_cap ? config.gamma * std::pow(1.0 - config.gamma, r - 1)
                                    : std::pow(1.0 - config.gamma, r_cap - 1);
    pinned.fixed_r = r;
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
    protocol::Deal deal = protocol::generate_shares(pinned, rng);
    const protocol::Transcript tx = protocol::run_game(deal, strategies, rng);
    const auto outcomes = protocol::classify_outcomes(tx, deal.secret());
    const auto u = utilities_of(profile, outcomes);
    for (int p = 0; p < t; ++p) {
      res.utility[p] += weight * u[p];
      res.p_secret[p] += outcomes[p] == Outcome::Secret ? weight : 0.0;
    }
  }
  return res;
}

std::vector<Strategy> single_deviation(int t, int deviator, Strategy s) {
  if (deviator < 1 || deviator > t) {
    throw Error(ErrorCode::IndexOutOfRange, "deviator " + std::to_string(deviator));
  }
  std::vector<Strategy> out(t, protocol::Honest{});
  out[deviator - 1] = s;
  return out;
}

}  // namespace qrss::game
