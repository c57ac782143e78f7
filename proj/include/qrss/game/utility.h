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

// Outcome utilities and the closed-form deviation payoffs.
//
// Letters name (own outcome, others' outcome): T got the secret, N did not,
// F committed to a fake.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qrss/protocol/engine.h"

namespace qrss::game {

using protocol::Outcome;
using protocol::Variant;

struct Utilities {
  double tn = 5.0;
  double tt = 3.0;
  double nn = 1.0;
  double nt = 0.0;
  double nf = 2.0;
  double fn = 0.0;
};

/// One entry shared by every player, or one entry per player.
struct UtilityProfile {
  std::vector<Utilities> players{Utilities{}};

  const Utilities& for_player(int player) const;
  int size() const { return static_cast<int>(players.size()); }
};

enum class Regime { R1, R2 };

/// R1: tn > tt > nn > nt for every player. R2 adds nf < tt.
bool validate_preferences(const UtilityProfile& profile, Regime regime);
bool validate_preferences(const Utilities& u, Regime regime);

/// (tt - nn) / (tn - nn), minimized over players. Throws PreferenceViolated
/// unless R1 holds.
double gamma_threshold(const UtilityProfile& profile);
double gamma_threshold(const Utilities& u);

/// c * gamma_threshold, for c in (0, 1).
double choose_gamma(const UtilityProfile& profile, double fraction = 0.5);

/// Pr[r >= j] = (1 - gamma)^(j - 1) under the geometric law.
double prob_r_at_least(double gamma, int j);

/// Smallest j with Pr[r >= j + 1] <= 0.001.
int default_j_max(double gamma);

/// Utility of `player` (1-based) for an outcome vector.
double utility_of(const Utilities& u, std::span<const Outcome> outcomes, int player);
std::vector<double> utilities_of(const UtilityProfile& profile,
                                 std::span<const Outcome> outcomes);

/// Semi-offline one-shot deviation at round j:
/// (gamma tn + (1 - gamma) nn - tt) (1 - gamma)^(j - 1) + tt.
double deviation_utility_semioffline(const Utilities& u, double gamma, int j);

/// Offline one-shot deviation at round j in the compact closed form
/// (gamma tn + (1 - gamma) nn) (1 - gamma)^(j - 1).
double deviation_utility_offline(const Utilities& u, double gamma, int j);

/// Offline one-shot deviation with every branch accounted for. Rounds before
/// the deviation still pay tt, and a fake commitment by the others pays nf.
double deviation_utility_offline_exact(const Utilities& u, double gamma, int j,
                                       bool last_player);

/// (probability, utility) branches of the deviator's payoff under the
/// engine's semantics; the exact formulas are their means.
std::vector<std::pair<double, double>> deviation_distribution(
    const Utilities& u, double gamma, int j, Variant variant, bool last_player);

double distribution_mean(std::span<const std::pair<double, double>> dist);
double distribution_variance(std::span<const std::pair<double, double>> dist);

}  // namespace qrss::game
