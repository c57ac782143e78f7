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

#include "qrss/game/utility.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrss/error.h"

namespace qrss::game {
namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange,
                "gamma must lie in (0, 1), got " + std::to_string(gamma));
  }
}

void check_round(int j) {
  if (j < 1) throw Error(ErrorCode::IndexOutOfRange, "quit round must be >= 1");
}

}  // namespace

const Utilities& UtilityProfile::for_player(int player) const {
  if (players.empty()) throw Error(ErrorCode::ConfigInvalid, "empty utility profile");
  if (players.size() == 1) return players.front();
  if (player < 1 || player > size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "no utilities for player " + std::to_string(player));
  }
  return players[player - 1];
}

bool validate_preferences(const Utilities& u, Regime regime) {
  const bool r1 = u.tn > u.tt && u.tt > u.nn && u.nn > u.nt;
  if (regime == Regime::R1) return r1;
  return r1 && u.nf < u.tt;
}

bool validate_preferences(const UtilityProfile& profile, Regime regime) {
  if (profile.players.empty()) return false;
  return std::all_of(profile.players.begin(), profile.players.end(),
                     [regime](const Utilities& u) { return validate_preferences(u, regime); });
}

double gamma_threshold(const Utilities& u) {
  if (!validate_preferences(u, Regime::R1)) {
    throw Error(ErrorCode::PreferenceViolated, "utilities violate tn > tt > nn > nt");
  }
  return (u.tt - u.nn) / (u.tn - u.nn);
}

double gamma_threshold(const UtilityProfile& profile) {
  if (profile.players.empty()) {
    throw Error(ErrorCode::PreferenceViolated, "empty utility profile");
  }
  double best = 1.0;
  for (const Utilities& u : profile.players) best = std::min(best, gamma_threshold(u));
  return best;
}

double choose_gamma(const UtilityProfile& profile, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma fraction must lie in (0, 1)");
  }
  return fraction * gamma_threshold(profile);
}

double prob_r_at_least(double gamma, int j) {
  check_gamma(gamma);
  check_round(j);
  return std::pow(1.0 - gamma, j - 1);
}

int default_j_max(double gamma) {
  check_gamma(gamma);
  return std::max(1, static_cast<int>(std::ceil(std::log(0.001) / std::log1p(-gamma))));
}

double utility_of(const Utilities& u, std::span<const Outcome> outcomes, int player) {
  if (player < 1 || player > static_cast<int>(outcomes.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "player outside outcome vector");
  }
  bool other_secret = false;
  bool other_fake = false;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (static_cast<int>(k) + 1 == player) continue;
    other_secret |= outcomes[k] == Outcome::Secret;
    other_fake |= outcomes[k] == Outcome::Fake;
  }
  switch (outcomes[player - 1]) {
    case Outcome::Secret: return other_secret ? u.tt : u.tn;
    case Outcome::Bot:
      if (other_secret) return u.nt;
      return other_fake ? u.nf : u.nn;
    case Outcome::Fake: return other_secret ? u.nt : u.fn;
  }
  return 0.0;
}

std::vector<double> utilities_of(const UtilityProfile& profile,
                                 std::span<const Outcome> outcomes) {
  std::vector<double> out;
  out.reserve(outcomes.size());
  for (int p = 1; p <= static_cast<int>(outcomes.size()); ++p) {
    out.push_back(utility_of(profile.for_player(p), outcomes, p));
  }
  return out;
}

double deviation_utility_semioffline(const Utilities& u, double gamma, int j) {
  const double reach = prob_r_at_least(gamma, j);
  return (gamma * u.tn + (1.0 - gamma) * u.nn - u.tt) * reach + u.tt;
}

double deviation_utility_offline(const Utilities& u, double gamma, int j) {
  return (gamma * u.tn + (1.0 - gamma) * u.nn) * prob_r_at_least(gamma, j);
}

std::vector<std::pair<double, double>> deviation_distribution(
    const Utilities& u, double gamma, int j, Variant variant, bool last_player) {
  const double reach = prob_r_at_least(gamma, j);  // Pr[r >= j]
  const double before = 1.0 - reach;               // Pr[r < j]
  const double at = gamma * reach;                 // Pr[r = j]
  const double after = reach - at;                 // Pr[r > j]
  if (variant == Variant::SemiOffline) {
    return {{before, u.tt}, {at, u.tn}, {after, u.nn}};
  }
  if (last_player) {
    // Only the next round's first delivery is withheld, so round j is what
    // everyone infers.
    return {{before + at, u.tt}, {after, u.nf}};
  }
  return {{before, u.tt}, {at, u.tn}, {after, j == 1 ? u.nn : u.nf}};
}

double distribution_mean(std::span<const std::pair<double, double>> dist) {
  double m = 0.0;
  for (const auto& [p, v] : dist) m += p * v;
  return m;
}

double distribution_variance(std::span<const std::pair<double, double>> dist) {
  const double m = distribution_mean(dist);
  double var = 0.0;
  for (const auto& [p, v] : dist) var += p * (v - m) * (v - m);
  return var;
}

double deviation_utility_offline_exact(const Utilities& u, double gamma, int j,
                                       bool last_player) {
  const auto dist = deviation_distribution(u, gamma, j, Variant::OfflineClassicalIndicator,
                                           last_player);
  return distribution_mean(dist);
}

}  // namespace qrss::game
