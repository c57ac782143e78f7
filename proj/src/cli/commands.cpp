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

#include "qrss/cli/commands.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrss/error.h"
#include "qrss/game/checks.h"
#include "qrss/io/config.h"
#include "qrss/io/report.h"

namespace qrss::cli {
namespace {

using io::Json;

struct Mismatch {
  std::string what;
};

io::RunConfig load(const Options& opts) {
  io::RunConfig cfg = io::load_config(opts.config);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.trials) {
    if (*opts.trials < 1) throw Error(ErrorCode::ConfigInvalid, "trials must be >= 1");
    cfg.trials = *opts.trials;
  }
  return cfg;
}

void emit(const Options& opts, const std::string& text, std::ostream& out) {
  if (opts.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::ConfigInvalid, "cannot write " + opts.out);
  file << text;
}

// Runs a command body and maps failures onto the exit-code contract.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Mismatch& m) {
    err << "mismatch: " << m.what << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::PreferenceViolated ? kExitPreference : kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

Json code_json(const css::CssCode& code) {
  auto words = [&](const std::vector<gf2::Word>& ws) {
    Json a = Json::array();
    for (auto w : ws) a.push_back(gf2::to_bit_string(w, code.n()));
    return a;
  };
  return Json{{"n", code.n()},
              {"k", code.k()},
              {"d", code.d()},
              {"message_qubits", code.message_qubits()},
              {"logical_zero", words(code.logical_zero())},
              {"logical_one", words(code.logical_one())}};
}

}  // namespace

int cmd_encode(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const io::RunConfig cfg = load(opts);
    const auto code = io::build_code(cfg.code);
    const auto state = css::encode_secret(*code, cfg.secret);

    Json amps = Json::array();
    for (std::size_t i = 0; i < state.dim(); ++i) {
      const auto a = state.amplitude(i);
      if (std::abs(a) < 1e-15) continue;
      amps.push_back(Json{{"basis", gf2::to_bit_string(i, code->n())},
                          {"amplitude", io::complex_json(a)}});
    }
    // Expected: alpha spread over logical_one, beta over logical_zero.
    std::vector<quantum::Amplitude> expect(state.dim());
    const double s1 = 1.0 / std::sqrt(static_cast<double>(code->logical_one().size()));
    const double s0 = 1.0 / std::sqrt(static_cast<double>(code->logical_zero().size()));
    for (auto w : code->logical_one()) expect[w] += cfg.secret.alpha * s1;
    for (auto w : code->logical_zero()) expect[w] += cfg.secret.beta * s0;
    double dev = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
      dev = std::max(dev, std::abs(state.amplitude(i) - expect[i]));
    }
    const bool ok = dev <= 1e-12;

    Json doc = code_json(*code);
    doc["secret"] = io::secret_json(cfg.secret);
    doc["amplitudes"] = std::move(amps);
    doc["coset_check"] = Json{{"max_deviation", io::round12(dev)}, {"ok", ok}};
    emit(opts, io::dump(doc), out);
    if (!ok) throw Mismatch{"encoded state deviates from the coset structure"};
    return int{kExitOk};
  }, err);
}

int cmd_access_structure(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const io::RunConfig cfg = load(opts);
    const auto code = io::build_code(cfg.code);
    Rng rng = make_rng(cfg.seed, 0);
    const auto found = css::enumerate_access_structure(*code, cfg.access_trials, rng);

    Json doc{{"n", code->n()},
             {"d", code->d()},
             {"subset_size", code->d()},
             {"secrets_per_subset", cfg.access_trials},
             {"authorized", io::positions_json(found.authorized_sets)},
             {"count", found.authorized_sets.size()}};
    std::optional<std::vector<css::Positions>> expected = cfg.expected_access_structure;
    if (!opts.expected.empty()) {
      expected = io::parse_position_sets(io::read_json_file(opts.expected));
    }
    bool match = true;
    if (expected) {
      const auto cmp = css::compare_access_structures(found, *expected);
      match = cmp.match;
      doc["expected"] = io::positions_json(*expected);
      doc["comparison"] = Json{{"match", cmp.match},
                               {"missing", io::positions_json(cmp.missing)},
                               {"extra", io::positions_json(cmp.extra)}};
    }
    emit(opts, io::dump(doc), out);
    if (!match) throw Mismatch{"access structure differs from the expected list"};
    return int{kExitOk};
  }, err);
}

int cmd_simulate(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const io::RunConfig cfg = load(opts);
    const auto code = io::build_code(cfg.code);
    const protocol::DealerConfig dc = io::make_dealer_config(cfg, code);
    const auto strategies = io::resolve_strategies(cfg, dc.t());
    const protocol::Dealer dealer(dc);
    Rng rng = make_rng(cfg.seed, 0);
    protocol::Deal deal = dealer.deal(rng);
    const auto tx = protocol::run_game(deal, strategies, rng);
    const auto outcomes = protocol::classify_outcomes(tx, deal.secret());
    const auto utils = game::utilities_of(cfg.utilities, outcomes);
    if (dc.variant == protocol::Variant::SemiOffline) {
      for (auto o : outcomes) {
        if (o == protocol::Outcome::Fake) {
          throw std::logic_error("semi-offline game produced a fake outcome");
        }
      }
    }

    Json strat = Json::array();
    for (const auto& s : strategies) strat.push_back(protocol::describe(s));
    Json u = Json::array();
    for (double x : utils) u.push_back(io::round12(x));
    Json doc{{"seed", cfg.seed},
             {"gamma", io::round12(dc.gamma)},
             {"designated_positions", dc.designated_positions},
             {"secret", io::secret_json(dc.secret)},
             {"strategies", std::move(strat)},
             {"transcript", io::transcript_json(tx)},
             {"outcomes", io::outcomes_json(outcomes)},
             {"utilities", std::move(u)}};
    emit(opts, io::dump(doc), out);
    if (!opts.out.empty()) {
      out << "variant " << protocol::to_string(dc.variant) << ", r = " << tx.r
          << ", ended in round " << tx.last_round << " (" << protocol::to_string(tx.end)
          << ")\n";
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        out << "P" << i + 1 << ": " << protocol::to_string(outcomes[i]) << ", utility "
            << io::format_real(utils[i]) << "\n";
      }
    }
    return int{kExitOk};
  }, err);
}

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const io::RunConfig cfg = load(opts);
    const auto fairness = game::check_fairness(cfg.utilities, io::resolve_gamma(cfg));
    const auto code = io::build_code(cfg.code);
    const protocol::DealerConfig dc = io::make_dealer_config(cfg, code);
    const int t = dc.t();
    const protocol::Dealer dealer(dc);
    const int j_max = cfg.j_max > 0 ? cfg.j_max : game::default_j_max(dc.gamma);

    game::NashOptions nopt;
    nopt.dealer = &dealer;
    nopt.trials = cfg.trials;
    nopt.seed = cfg.seed;
    nopt.corroborate_j_max = cfg.corroborate_j_max;
    const auto nash = game::check_strict_nash(cfg.utilities, dc.gamma, dc.variant, j_max, t, nopt);
    const auto probs = game::probability_cross_check(dc, std::min(j_max, cfg.corroborate_j_max),
                                                     0, cfg.seed);

    Json doc{{"variant", protocol::to_string(dc.variant)},
             {"t", t},
             {"trials", cfg.trials},
             {"seed", cfg.seed},
             {"fairness", io::fairness_json(fairness)},
             {"probability_check", io::probability_rows_json(probs)},
             {"strict_nash", io::nash_json(nash)}};
    if (dc.variant == protocol::Variant::SemiOffline) {
      doc["correctness"] = io::sweep_json(
          game::sweep_fake_outcomes(dc, cfg.correctness_rounds, cfg.seed));
    } else {
      doc["correctness"] = io::argmax_json(game::honest_argmax(dc, cfg.utilities, j_max, cfg.seed));
    }
    emit(opts, io::dump(doc), out);
    if (!opts.out.empty()) {
      out << "gamma " << io::format_real(dc.gamma) << ", threshold "
          << io::format_real(fairness.threshold) << ": "
          << (fairness.fair ? "fair" : "not fair") << ", "
          << (nash.strict_nash ? "strict Nash" : "not strict Nash") << "\n";
    }
    return int{kExitOk};
  }, err);
}

int cmd_sweep(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const io::RunConfig cfg = load(opts);
    const auto code = io::build_code(cfg.code);
    protocol::DealerConfig dc = io::make_dealer_config(cfg, code);
    const int t = dc.t();
    const int p = cfg.sweep.player;
    if (p < 1 || p > t) throw Error(ErrorCode::ConfigInvalid, "sweep player out of range");
    std::ostringstream csv;
    csv << "gamma,j,analytic,empirical_mean,stderr\n";
    std::uint64_t point = 0;
    for (double gamma : cfg.sweep.gammas) {
      dc.gamma = gamma;
      const protocol::Dealer dealer(dc);
      for (int j : cfg.sweep.rounds) {
        const auto strategies =
            game::single_deviation(t, p, protocol::quit_after_own_subround(p, j));
        const auto& u = cfg.utilities.for_player(p);
        const double analytic = game::distribution_mean(
            game::deviation_distribution(u, gamma, j, dc.variant, p == t));
        const auto res = game::estimate_utilities_montecarlo(
            dealer, strategies, cfg.utilities, cfg.trials, cfg.seed + 7919 * point++);
        csv << io::format_real(gamma) << ',' << j << ',' << io::format_real(analytic) << ','
            << io::format_real(res.utility[p - 1].mean) << ','
            << io::format_real(res.utility[p - 1].std_error) << '\n';
      }
    }
    emit(opts, csv.str(), out);
    return int{kExitOk};
  }, err);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum rational secret sharing workbench"};
  app.require_subcommand(1);
  Options opts;
  std::uint64_t seed = 0;
  long trials = 0;
  std::function<int(const Options&, std::ostream&, std::ostream&)> chosen;

  auto add = [&](const std::string& name, const std::string& help, auto fn, bool expected) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opts.config, "JSON run configuration")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--trials", trials, "override the config trial count");
    sub->add_option("--out", opts.out, "output file (default: stdout)");
    if (expected) sub->add_option("--expected", opts.expected, "JSON list of expected tuples");
    sub->callback([&, fn] { chosen = fn; });
  };
  add("encode", "encode the configured secret and list its amplitudes", cmd_encode, false);
  add("access-structure", "enumerate authorized position tuples", cmd_access_structure, true);
  add("simulate", "play one game and write its transcript", cmd_simulate, false);
  add("check", "fairness, strict-Nash and correctness report", cmd_check, false);
  add("sweep", "analytic vs Monte Carlo deviation utility as CSV", cmd_sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) opts.seed = seed;
    if (sub->count("--trials") > 0) opts.trials = trials;
  }
  return chosen(opts, out, err);
}

}  // namespace qrss::cli
