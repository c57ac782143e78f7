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

// Expected utilities of a strategy profile, sampled or summed over r.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrss/game/utility.h"
#include "qrss/protocol/dealer.h"
#include "qrss/protocol/engine.h"

namespace qrss::game {

using protocol::Strategy;

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // of the mean
};

struct MonteCarloResult {
  long trials = 0;
  std::vector<Estimate> utility;       // per player
  std::vector<double> p_secret;        // empirical Pr[o_i = s]
  std::vector<long> fake_count;        // games where o_i = fake
};

/// Plays `trials` independent games; trial k draws from make_rng(seed, k),
/// so the result depends only on (dealer, strategies, profile, trials, seed).
MonteCarloResult estimate_utilities_montecarlo(const protocol::Dealer& dealer,
                                               std::span<const Strategy> strategies,
                                               const UtilityProfile& profile,
                                               long trials, std::uint64_t seed);

struct ExactResult {
  std::vector<double> utility;   // per player
  std::vector<double> p_secret;  // Pr[o_i = s]
};

/// Expectation over r by playing one game per r = 1..r_cap - 1 and one for
/// the tail r >= r_cap, weighted by the geometric law, with w = 1. Exact when
/// the outcome does not change for r >= r_cap, which holds for QuitAt
/// strategies quitting no later than round r_cap - 2.
ExactResult expected_by_enumeration(const protocol::DealerConfig& config,
                                    std::span<const Strategy> strategies,
                                    const UtilityProfile& profile, int r_cap,
                                    std::uint64_t seed);

/// Strategy vector with everyone honest except `deviator`.
std::vector<Strategy> single_deviation(int t, int deviator, Strategy s);

}  // namespace qrss::game
