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

#include "qrss/game/checks.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qrss/error.h"

namespace qrss::game {
namespace {

constexpr std::size_t kMaxViolations = 8;

void require(const UtilityProfile& profile, Regime regime) {
  if (!validate_preferences(profile, regime)) {
    throw Error(ErrorCode::PreferenceViolated,
                regime == Regime::R1 ? "utilities violate tn > tt > nn > nt"
                                     : "utilities violate R1 or nf < tt");
  }
}

}  // namespace

FairnessVerdict check_fairness(const UtilityProfile& profile, double gamma) {
  require(profile, Regime::R1);
  FairnessVerdict v;
  v.gamma = gamma;
  for (const Utilities& u : profile.players) v.player_thresholds.push_back(gamma_threshold(u));
  v.threshold = gamma_threshold(profile);
  v.margin = v.threshold - gamma;
  v.fair = gamma > 0.0 && gamma < v.threshold;
  return v;
}

std::vector<ProbabilityRow> probability_cross_check(const protocol::DealerConfig& config,
                                                    int j_max, long trials,
                                                    std::uint64_t seed) {
  const int t = config.t();
  const UtilityProfile flat;
  std::vector<ProbabilityRow> rows;
  std::optional<protocol::Dealer> dealer;
  if (trials > 0) dealer.emplace(config);
  for (int p = 1; p <= t; ++p) {
    for (int j = 1; j <= j_max; ++j) {
      const auto strategies = single_deviation(t, p, protocol::quit_after_own_subround(p, j));
      std::vector<double> ps;
      if (trials > 0) {
        ps = estimate_utilities_montecarlo(*dealer, strategies, flat, trials,
                                           seed + static_cast<std::uint64_t>(p * 1000 + j))
                 .p_secret;
      } else {
        ps = expected_by_enumeration(config, strategies, flat, j + 2, seed).p_secret;
      }
      ProbabilityRow row{p, j, ps[p - 1], 0.0, false};
      for (int k = 1; k <= t; ++k) {
        if (k != p) row.p_others += ps[k - 1];
      }
      row.p_others /= static_cast<double>(t - 1);
      row.holds = row.p_deviator < row.p_others ||
                  (row.p_deviator == 0.0 && row.p_others == 0.0);
      rows.push_back(row);
    }
  }
  return rows;
}

NashVerdict check_strict_nash(const UtilityProfile& profile, double gamma,
                              Variant variant, int j_max, int t,
                              const NashOptions& options) {
  require(profile, protocol::is_offline(variant) ? Regime::R2 : Regime::R1);
  if (t < 2) throw Error(ErrorCode::ConfigInvalid, "need at least two players");
  NashVerdict v;
  v.variant = variant;
  v.gamma = gamma;
  v.j_max = j_max > 0 ? j_max : default_j_max(gamma);
  v.strict_nash = true;
  const bool mc = options.dealer != nullptr && options.trials > 0;
  for (int p = 1; p <= t; ++p) {
    const Utilities& u = profile.for_player(p);
    for (int j = 1; j <= v.j_max; ++j) {
      NashRow row;
      row.player = p;
      row.j = j;
      row.honest = u.tt;
      const auto dist = deviation_distribution(u, gamma, j, variant, p == t);
      row.exact = distribution_mean(dist);
      row.closed_form = protocol::is_offline(variant)
                            ? deviation_utility_offline(u, gamma, j)
                            : deviation_utility_semioffline(u, gamma, j);
      row.below = row.exact < row.honest;
      v.strict_nash &= row.below;
      if (mc && j <= options.corroborate_j_max) {
        const auto strategies =
            single_deviation(t, p, protocol::quit_after_own_subround(p, j));
        const auto res = estimate_utilities_montecarlo(
            *options.dealer, strategies, profile, options.trials,
            options.seed + static_cast<std::uint64_t>(p * 1000 + j));
        row.has_empirical = true;
        row.empirical = res.utility[p - 1];
        const double analytic_se =
            std::sqrt(distribution_variance(dist) / static_cast<double>(options.trials));
        row.tolerance = 3.0 * std::max(row.empirical.std_error, analytic_se) + 1e-12;
        row.corroborated = std::abs(row.empirical.mean - row.exact) <= row.tolerance;
        v.corroborated &= row.corroborated;
      }
      v.rows.push_back(row);
    }
  }
  return v;
}

CorrectnessSweep sweep_fake_outcomes(const protocol::DealerConfig& config,
                                     int max_rounds, std::uint64_t seed) {
  const int t = config.t();
  const UtilityProfile flat;
  CorrectnessSweep sweep;
  protocol::DealerConfig pinned = config;
  auto play = [&](int r, int w, const std::vector<Strategy>& strategies) {
    pinned.fixed_r = r;
    pinned.fixed_w = w;
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(sweep.games));
    protocol::Deal deal = protocol::Dealer(pinned).deal(rng);
    const auto tx = protocol::run_game(deal, strategies, rng);
    const auto outcomes = protocol::classify_outcomes(tx, deal.secret());
    ++sweep.games;
    for (std::size_t p = 0; p < outcomes.size(); ++p) {
      if (outcomes[p] != Outcome::Fake) continue;
      ++sweep.fakes;
      if (sweep.violations.size() < kMaxViolations) {
        std::string who;
        for (const auto& s : strategies) who += (who.empty() ? "" : " ") + protocol::describe(s);
        sweep.violations.push_back("r=" + std::to_string(r) + " w=" + std::to_string(w) +
                                   " player " + std::to_string(p + 1) + " [" + who + "]");
      }
    }
  };
  for (int r = 1; r < max_rounds; ++r) {
    for (int w = 1; r + w <= max_rounds; ++w) {
      play(r, w, std::vector<Strategy>(t, protocol::Honest{}));
      for (int p = 1; p <= t; ++p) {
        for (int j = 1; j <= r + w; ++j) {
          for (int s = 1; s <= t + 1; ++s) {
            play(r, w, single_deviation(t, p, protocol::QuitAt{j, s}));
          }
        }
      }
    }
  }
  return sweep;
}

ArgmaxReport honest_argmax(const protocol::DealerConfig& config,
                           const UtilityProfile& profile, int j_max,
                           std::uint64_t seed) {
  const int t = config.t();
  ArgmaxReport rep;
  rep.honest_strict_argmax = true;
  const auto honest = std::vector<Strategy>(t, protocol::Honest{});
  rep.honest = expected_by_enumeration(config, honest, profile, 3, seed).utility;
  rep.best.resize(t);
  for (int p = 1; p <= t; ++p) {
    ArgmaxRow& best = rep.best[p - 1];
    best = {p, 0, 0, -INFINITY};
    for (int j = 1; j <= j_max; ++j) {
      for (int s = 1; s <= t + 1; ++s) {
        const auto strategies = single_deviation(t, p, protocol::QuitAt{j, s});
        const double u =
            expected_by_enumeration(config, strategies, profile, j + 2, seed).utility[p - 1];
        rep.rows.push_back({p, j, s, u});
        if (u > best.utility) best = rep.rows.back();
      }
    }
    rep.honest_strict_argmax &= best.utility < rep.honest[p - 1];
  }
  return rep;
}

}  // namespace qrss::game
