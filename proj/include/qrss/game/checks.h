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

// Fairness, strict-Nash and correctness checkers.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrss/game/estimate.h"
#include "qrss/game/utility.h"
#include "qrss/protocol/dealer.h"

namespace qrss::game {

struct FairnessVerdict {
  double gamma = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // threshold - gamma
  bool fair = false;    // gamma < threshold, strictly
  std::vector<double> player_thresholds;
};

/// Throws PreferenceViolated unless R1 holds.
FairnessVerdict check_fairness(const UtilityProfile& profile, double gamma);

/// Pr[o = s] for a one-shot deviator at round j against the average over the
/// honest players.
struct ProbabilityRow {
  int player = 0;
  int j = 0;
  double p_deviator = 0.0;
  double p_others = 0.0;
  bool holds = false;  // p_deviator < p_others, or both zero
};

/// Sweeps players and j = 1..j_max. With trials > 0 the probabilities are
/// sampled; with trials == 0 they are summed exactly over r.
std::vector<ProbabilityRow> probability_cross_check(const protocol::DealerConfig& config,
                                                    int j_max, long trials,
                                                    std::uint64_t seed);

struct NashOptions {
  // Monte Carlo corroboration runs only when both are set.
  const protocol::Dealer* dealer = nullptr;
  long trials = 0;
  std::uint64_t seed = 0;
  int corroborate_j_max = 3;
};

struct NashRow {
  int player = 0;
  int j = 0;
  double closed_form = 0.0;  // compact closed form for the variant
  double exact = 0.0;        // all branches accounted for
  double honest = 0.0;       // tt
  bool below = false;        // exact < honest
  bool has_empirical = false;
  Estimate empirical;
  double tolerance = 0.0;
  bool corroborated = true;
};

struct NashVerdict {
  Variant variant = Variant::SemiOffline;
  double gamma = 0.0;
  int j_max = 0;
  bool strict_nash = false;
  bool corroborated = true;
  std::vector<NashRow> rows;
};

/// Every player's one-shot deviation at j = 1..j_max must pay strictly less
/// than honest play. Offline variants require R2, the semi-offline variant
/// R1; otherwise throws PreferenceViolated. j_max = 0 picks default_j_max.
NashVerdict check_strict_nash(const UtilityProfile& profile, double gamma,
                              Variant variant, int j_max, int t,
                              const NashOptions& options = {});

struct CorrectnessSweep {
  long games = 0;
  long fakes = 0;
  std::vector<std::string> violations;  // first few offending profiles
};

/// Every single-deviator QuitAt(j, s) profile and every (r, w) with
/// r + w <= max_rounds, plus all-honest play. Counts fake outcomes.
CorrectnessSweep sweep_fake_outcomes(const protocol::DealerConfig& config,
                                     int max_rounds, std::uint64_t seed);

struct ArgmaxRow {
  int player = 0;
  int j = 0;
  int sub_round = 0;
  double utility = 0.0;
};

struct ArgmaxReport {
  bool honest_strict_argmax = false;
  std::vector<double> honest;      // per player
  std::vector<ArgmaxRow> best;     // best deviation per player
  std::vector<ArgmaxRow> rows;
};

/// Exact expected utility, by enumeration over r, of Honest and of every
/// QuitAt(j, s) with j <= j_max and s in 1..t+1. Honest must beat all of
/// them for every player.
ArgmaxReport honest_argmax(const protocol::DealerConfig& config,
                           const UtilityProfile& profile, int j_max,
                           std::uint64_t seed);

}  // namespace qrss::game
