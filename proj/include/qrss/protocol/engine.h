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

// Round-based reconstruction game. Round j has t sub-rounds; in sub-round i
// every other player hands P_i its element for (round j, copy i), so P_i ends
// the sub-round holding every designated qubit of that copy.
//
// Players are fail-stop: a deviating player goes silent from some
// (round, sub-round) on and never sends anything again, but keeps receiving
// until the game ends.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrss/protocol/dealer.h"

namespace qrss::protocol {

struct Honest {};

/// Silent from sub-round `sub_round` (1..t+1) of round `round`. t + 1 means
/// after the round's last sub-round, so only later deliveries and the final
/// signal are withheld.
struct QuitAt {
  int round = 1;
  int sub_round = 1;
};

/// After each own sub-round, quits with probability `hazard`, keeping the
/// copy just received as its guess.
struct GuessAndQuit {
  double hazard = 0.5;
};

using Strategy = std::variant<Honest, QuitAt, GuessAndQuit>;

/// The one-shot deviation of P_i at round j: quit right after its own
/// sub-round, holding copy i of round j.
inline QuitAt quit_after_own_subround(int player, int round) {
  return {round, player + 1};
}

std::string describe(const Strategy& s);

struct Delivery {
  int round = 0;
  int sub_round = 0;
  int from = 0;
  int to = 0;
  bool delivered = true;
};

struct ReconstructionRecord {
  int player = 0;
  int round = 0;
  int copy = 0;
  ShareKind kind = ShareKind::Secret;
  std::string outcome;
  std::string correction;  // "I" or "X"
  double probability = 1.0;
  double fidelity = 0.0;  // against what the dealer put in that copy
  SecretQubit recovered;
};

struct IndicatorRecord {
  int player = 0;
  int round = 0;
  int value = 0;
  std::vector<shamir::IndicatorShare> shares;  // classical variant only
};

struct QuitEvent {
  int player = 0;
  int round = 0;
  int sub_round = 0;
  bool by_protocol = false;  // indicator-triggered, not a deviation
};

enum class OutputKind {
  None,       // nothing to output
  Guess,      // a quitter's last reconstruction, unconfirmed
  Confirmed,  // secret of a round the player believes is r
};

struct PlayerOutput {
  OutputKind kind = OutputKind::None;
  int round = 0;
  SecretQubit state;
};

enum class Announcement { None, RevealR, Abort };

enum class EndReason { Announced, DealerAbort, QuitDetected, Exhausted };

struct Transcript {
  Variant variant = Variant::SemiOffline;
  int t = 0;
  int r = 0;
  int w = 0;
  int last_round = 0;  // round in which the game ended
  EndReason end = EndReason::Exhausted;
  std::vector<Delivery> deliveries;
  std::vector<ReconstructionRecord> reconstructions;
  std::vector<IndicatorRecord> indicators;
  std::vector<QuitEvent> quits;
  std::vector<std::optional<int>> signals;  // semi-offline sig_i per player
  Announcement announcement = Announcement::None;
  std::optional<int> announced_r;
  std::vector<PlayerOutput> outputs;  // outputs[i - 1] for P_i
  bool complete = false;

  /// First quit event of any kind, if one occurred.
  std::optional<QuitEvent> first_quit() const;
};

/// Plays the deal to the end. `strategies` holds one entry per player.
/// Consumes the deal's quantum shares.
Transcript run_game(Deal& deal, std::span<const Strategy> strategies, Rng& rng);

enum class Outcome { Secret, Bot, Fake };

std::string_view to_string(Outcome o);
std::string_view to_string(OutputKind k);
std::string_view to_string(EndReason e);

/// Per-player outcome. Confirmed outputs are s or fake by fidelity against
/// the true secret; a Guess is s or bot. Semi-offline games aborted after the
/// revelation round count as s for everyone, since round r was completed by
/// all players. Throws IncompleteTranscript on an unfinished transcript.
std::vector<Outcome> classify_outcomes(const Transcript& transcript,
                                       const SecretQubit& secret);

}  // namespace qrss::protocol
