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

#include "qrss/protocol/engine.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "qrss/error.h"

namespace qrss::protocol {
namespace {

bool reached(int round, int sub_round, const QuitAt& q) {
  return round > q.round || (round == q.round && sub_round >= q.sub_round);
}

bool earlier(const QuitAt& a, const QuitAt& b) {
  return a.round < b.round || (a.round == b.round && a.sub_round < b.sub_round);
}

std::string correction_name(css::Correction c) {
  switch (c) {
    case css::Correction::I: return "I";
    case css::Correction::X: return "X";
    case css::Correction::Ambiguous: return "?";
  }
  return "?";
}

class Engine {
 public:
  Engine(Deal& deal, std::span<const Strategy> strategies, Rng& rng)
      : deal_(deal), strategies_(strategies.begin(), strategies.end()), rng_(rng) {
    const int t = deal_.t;
    if (static_cast<int>(strategies_.size()) != t) {
      throw Error(ErrorCode::ConfigInvalid,
                  "expected " + std::to_string(t) + " strategies, got " +
                      std::to_string(strategies_.size()));
    }
    quit_.resize(t);
    recorded_.assign(t, false);
    by_protocol_.assign(t, false);
    stored_.assign(t, std::vector<std::optional<SecretQubit>>(deal_.rounds() + 1));
    for (int p = 1; p <= t; ++p) {
      const Strategy& s = strategies_[p - 1];
      if (const auto* q = std::get_if<QuitAt>(&s)) {
        if (q->round < 1 || q->sub_round < 1 || q->sub_round > t + 1) {
          throw Error(ErrorCode::ConfigInvalid, "quit point outside the game");
        }
        quit_[p - 1] = *q;
      } else if (const auto* g = std::get_if<GuessAndQuit>(&s)) {
        if (!(g->hazard >= 0.0 && g->hazard <= 1.0)) {
          throw Error(ErrorCode::ConfigInvalid, "hazard must lie in [0, 1]");
        }
      }
    }
    tx_.variant = deal_.variant;
    tx_.t = t;
    tx_.r = deal_.r;
    tx_.w = deal_.w;
    tx_.signals.resize(t);
    tx_.outputs.resize(t);
  }

  Transcript run() {
    const int t = deal_.t;
    for (int j = 1; j <= deal_.rounds(); ++j) {
      for (int s = 1; s <= t; ++s) {
        note_quits(j, s);
        const bool full = deliver(j, s);
        if (!full && !silent(s, j, s)) {
          abort(j, s);
          return finish();
        }
        if (full) on_full_copy(s, j);
      }
      note_quits(j, t + 1);
    }
    end_of_list();
    return finish();
  }

 private:
  bool silent(int p, int round, int sub_round) const {
    const auto& q = quit_[p - 1];
    return q && reached(round, sub_round, *q);
  }

  bool is_quitter(int p) const { return recorded_[p - 1]; }

  void set_quit(int p, QuitAt q, bool protocol) {
    auto& cur = quit_[p - 1];
    if (!cur || earlier(q, *cur)) {
      cur = q;
      by_protocol_[p - 1] = protocol;
    }
  }

  void note_quits(int round, int sub_round) {
    for (int p = 1; p <= deal_.t; ++p) {
      if (!recorded_[p - 1] && silent(p, round, sub_round)) {
        recorded_[p - 1] = true;
        const QuitAt& q = *quit_[p - 1];
        tx_.quits.push_back({p, q.round, q.sub_round, by_protocol_[p - 1]});
      }
    }
  }

  const ShareElement& element(int owner, int round, int copy) const {
    const std::size_t idx =
        static_cast<std::size_t>(round - 1) * deal_.t + static_cast<std::size_t>(copy - 1);
    return deal_.lists[owner - 1].elements[idx];
  }

  bool deliver(int j, int s) {
    bool full = true;
    for (int k = 1; k <= deal_.t; ++k) {
      if (k == s) continue;
      const bool sent = !silent(k, j, s);
      tx_.deliveries.push_back({j, s, k, s, sent});
      if (!sent) {
        full = false;
        continue;
      }
      const ShareElement& e = element(k, j, s);
      deal_.pool.transfer(e.secret_share, k, s);
      if (e.indicator_qubit) deal_.pool.transfer(*e.indicator_qubit, k, s);
    }
    return full;
  }

  css::Reconstruction reconstruct(ShareKind kind, int p, int round, int copy,
                                  const SecretQubit& expected) {
    StateVector state = deal_.pool.consume_copy(kind, round, copy, p);
    css::Reconstruction rec =
        css::reconstruct(*deal_.css, std::move(state), deal_.positions, rng_);
    ReconstructionRecord r;
    r.player = p;
    r.round = round;
    r.copy = copy;
    r.kind = kind;
    r.outcome = rec.outcome;
    r.correction = correction_name(rec.correction);
    r.probability = rec.probability;
    r.fidelity = rec.fidelity_with(expected);
    r.recovered = rec.recovered();
    tx_.reconstructions.push_back(std::move(r));
    return rec;
  }

  SecretQubit reconstruct_secret(int p, int round) {
    return reconstruct(ShareKind::Secret, p, round, p, deal_.truth[round - 1]).recovered();
  }

  int read_indicator(int p, int j) {
    IndicatorRecord rec{p, j, 0, {}};
    if (deal_.variant == Variant::OfflineClassicalIndicator) {
      for (int k = 1; k <= deal_.t; ++k) rec.shares.push_back(*element(k, j, p).indicator_share);
      rec.value = shamir::reconstruct_bit(rec.shares, deal_.t, deal_.field_prime);
    } else {
      const int bit = deal_.indicator_bits[j - 1];
      const auto r = reconstruct(ShareKind::Indicator, p, j, p,
                                 bit ? SecretQubit::one() : SecretQubit::zero());
      const double p_one = std::clamp(r.control(1, 1).real(), 0.0, 1.0);
      rec.value = uniform01(rng_) < p_one ? 1 : 0;
    }
    tx_.indicators.push_back(rec);
    return rec.value;
  }

  void on_full_copy(int p, int j) {
    const bool participating = !silent(p, j, p);
    if (deal_.variant == Variant::SemiOffline) {
      stored_[p - 1][j] = reconstruct_secret(p, j);
    } else if (participating) {
      if (read_indicator(p, j) == 1) {
        PlayerOutput& out = tx_.outputs[p - 1];
        if (j >= 2 && deal_.pool.holds_full_copy(ShareKind::Secret, j - 1, p, p)) {
          out = {OutputKind::Confirmed, j - 1, reconstruct_secret(p, j - 1)};
        }
        set_quit(p, {j, p + 1}, true);
        return;
      }
    }
    if (!participating || silent(p, j, p + 1)) return;
    if (const auto* g = std::get_if<GuessAndQuit>(&strategies_[p - 1])) {
      if (uniform01(rng_) < g->hazard) set_quit(p, {j, p + 1}, false);
    }
  }

  // Latest round whose copy p can still reconstruct, or stored, at game end.
  void output_guess(int p, int up_to_round) {
    PlayerOutput& out = tx_.outputs[p - 1];
    if (out.kind != OutputKind::None) return;
    if (deal_.variant == Variant::SemiOffline) {
      for (int j = up_to_round; j >= 1; --j) {
        if (stored_[p - 1][j]) {
          out = {OutputKind::Guess, j, *stored_[p - 1][j]};
          return;
        }
      }
      return;
    }
    for (int j = up_to_round; j >= 1; --j) {
      if (deal_.pool.holds_full_copy(ShareKind::Secret, j, p, p)) {
        out = {OutputKind::Guess, j, reconstruct_secret(p, j)};
        return;
      }
    }
  }

  void abort(int j, int s) {
    tx_.last_round = j;
    if (deal_.variant == Variant::SemiOffline) {
      tx_.end = EndReason::DealerAbort;
      tx_.signals[s - 1] = 0;
      tx_.announcement = Announcement::Abort;
      for (int p = 1; p <= deal_.t; ++p) {
        if (is_quitter(p)) output_guess(p, j);
      }
      return;
    }
    // Quit-signal inference: the round before the first missing delivery.
    tx_.end = EndReason::QuitDetected;
    const int inferred = j - 1;
    for (int p = 1; p <= deal_.t; ++p) {
      PlayerOutput& out = tx_.outputs[p - 1];
      if (out.kind != OutputKind::None) continue;
      if (is_quitter(p)) {
        output_guess(p, j);
      } else if (inferred >= 1 &&
                 deal_.pool.holds_full_copy(ShareKind::Secret, inferred, p, p)) {
        out = {OutputKind::Confirmed, inferred, reconstruct_secret(p, inferred)};
      }
    }
  }

  void end_of_list() {
    const int rounds = deal_.rounds();
    tx_.last_round = rounds;
    if (deal_.variant != Variant::SemiOffline) {
      tx_.end = EndReason::Exhausted;
      for (int p = 1; p <= deal_.t; ++p) {
        if (is_quitter(p)) output_guess(p, rounds);
      }
      return;
    }
    bool all = true;
    for (int p = 1; p <= deal_.t; ++p) {
      if (is_quitter(p)) {
        all = false;
      } else {
        tx_.signals[p - 1] = 1;
      }
    }
    if (all) {
      tx_.end = EndReason::Announced;
      tx_.announcement = Announcement::RevealR;
      tx_.announced_r = deal_.r;
      for (int p = 1; p <= deal_.t; ++p) {
        const auto& kept = stored_[p - 1][deal_.r];
        if (kept) tx_.outputs[p - 1] = {OutputKind::Confirmed, deal_.r, *kept};
      }
      return;
    }
    tx_.end = EndReason::DealerAbort;
    tx_.announcement = Announcement::Abort;
    for (int p = 1; p <= deal_.t; ++p) {
      if (is_quitter(p)) output_guess(p, rounds);
    }
  }

  Transcript finish() {
    tx_.complete = true;
    return std::move(tx_);
  }

  Deal& deal_;
  std::vector<Strategy> strategies_;
  Rng& rng_;
  Transcript tx_;
  std::vector<std::optional<QuitAt>> quit_;
  std::vector<bool> recorded_;
  std::vector<bool> by_protocol_;
  std::vector<std::vector<std::optional<SecretQubit>>> stored_;  // [player][round]
};

}  // namespace

std::string describe(const Strategy& s) {
  if (std::holds_alternative<Honest>(s)) return "honest";
  if (const auto* q = std::get_if<QuitAt>(&s)) {
    return "quit_at(" + std::to_string(q->round) + "," + std::to_string(q->sub_round) + ")";
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "guess_and_quit(%.6g)", std::get<GuessAndQuit>(s).hazard);
  return buf;
}

std::optional<QuitEvent> Transcript::first_quit() const {
  if (quits.empty()) return std::nullopt;
  return quits.front();
}

Transcript run_game(Deal& deal, std::span<const Strategy> strategies, Rng& rng) {
  return Engine(deal, strategies, rng).run();
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Secret: return "s";
    case Outcome::Bot: return "bot";
    case Outcome::Fake: return "fake";
  }
  return "?";
}

std::string_view to_string(OutputKind k) {
  switch (k) {
    case OutputKind::None: return "none";
    case OutputKind::Guess: return "guess";
    case OutputKind::Confirmed: return "confirmed";
  }
  return "?";
}

std::string_view to_string(EndReason e) {
  switch (e) {
    case EndReason::Announced: return "announced";
    case EndReason::DealerAbort: return "dealer_abort";
    case EndReason::QuitDetected: return "quit_detected";
    case EndReason::Exhausted: return "exhausted";
  }
  return "?";
}

std::vector<Outcome> classify_outcomes(const Transcript& tx, const SecretQubit& secret) {
  if (!tx.complete || static_cast<int>(tx.outputs.size()) != tx.t || tx.t == 0) {
    throw Error(ErrorCode::IncompleteTranscript, "transcript has no final outputs");
  }
  std::vector<Outcome> out(tx.outputs.size(), Outcome::Bot);
  if (tx.variant == Variant::SemiOffline && tx.announcement == Announcement::Abort) {
    const auto q = tx.first_quit();
    if (q && q->round > tx.r) {
      out.assign(out.size(), Outcome::Secret);
      return out;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const PlayerOutput& o = tx.outputs[i];
    const bool match = quantum::fidelity(o.state, secret) >= css::kRecoveryFidelity;
    switch (o.kind) {
      case OutputKind::None: out[i] = Outcome::Bot; break;
      case OutputKind::Guess: out[i] = match ? Outcome::Secret : Outcome::Bot; break;
      case OutputKind::Confirmed: out[i] = match ? Outcome::Secret : Outcome::Fake; break;
    }
  }
  return out;
}

}  // namespace qrss::protocol
