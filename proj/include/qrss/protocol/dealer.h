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

// Dealer side of the reconstruction game: secret/fake schedule, encoded
// copies, indicator shares and the per-player share lists.

#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "qrss/css/css_code.h"
#include "qrss/quantum/state.h"
#include "qrss/random.h"
#include "qrss/shamir/shamir.h"

namespace qrss::protocol {

using quantum::SecretQubit;
using quantum::StateVector;

enum class Variant {
  SemiOffline,                // dealer unmasks r after collecting signals
  OfflineClassicalIndicator,  // (t,t) Shamir share of b per element
  OfflineQuantumIndicator,    // CSS-encoded |b> per element
};

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);
inline bool is_offline(Variant v) { return v != Variant::SemiOffline; }

/// k >= 1 with probability gamma (1 - gamma)^(k - 1), by inverting the CDF
/// at one uniform draw. Throws GammaOutOfRange unless 0 < gamma < 1.
int sample_geometric(double gamma, Rng& rng);

struct DealerConfig {
  double gamma = 0.25;
  SecretQubit secret;
  std::shared_ptr<const css::CssCode> css;
  // Player P_i holds qubit designated_positions[i - 1] of every copy.
  css::Positions designated_positions;
  Variant variant = Variant::SemiOffline;
  shamir::FieldElement field_prime = shamir::kDefaultPrime;
  // Pin the geometric draws; used by exhaustive sweeps.
  std::optional<int> fixed_r;
  std::optional<int> fixed_w;

  int t() const { return static_cast<int>(designated_positions.size()); }
};

enum class ShareKind { Secret, Indicator };

/// Reference to one physical qubit: `position` of copy `copy` (1..t) of the
/// round-`round` encoding.
struct QubitHandle {
  ShareKind kind = ShareKind::Secret;
  int round = 0;
  int copy = 0;
  int position = 0;
};

struct ShareElement {
  QubitHandle secret_share;
  std::optional<shamir::IndicatorShare> indicator_share;  // classical offline
  std::optional<QubitHandle> indicator_qubit;             // quantum offline
};

struct ShareList {
  int owner = 0;
  // Ordered by round, then copy: t * (r + w) elements.
  std::vector<ShareElement> elements;
};

/// The jointly held encoded states. Qubits move between players by
/// transfer(); a copy is consumed once, by the player holding all of its
/// designated qubits. Any other use throws NoCloningViolation.
class SharePool {
 public:
  SharePool() = default;
  SharePool(std::shared_ptr<const css::CssCode> css, css::Positions positions,
            int rounds);

  void add_copy(ShareKind kind, int round, int copy, SecretQubit payload);

  int holder(const QubitHandle& h) const;
  bool consumed(const QubitHandle& h) const;
  /// Moves qubit `h` from `from` to `to`.
  void transfer(const QubitHandle& h, int from, int to);
  /// Returns the encoded state of (kind, round, copy) and marks every qubit of
  /// it consumed. `player` must hold all designated qubits of the copy.
  StateVector consume_copy(ShareKind kind, int round, int copy, int player);
  bool holds_full_copy(ShareKind kind, int round, int copy, int player) const;

 private:
  struct Copy {
    SecretQubit payload;
    std::vector<int> holders;  // per designated slot; 0 = consumed
    bool present = false;
  };
  Copy& at(ShareKind kind, int round, int copy);
  const Copy& at(ShareKind kind, int round, int copy) const;
  int slot_of(int position) const;

  std::shared_ptr<const css::CssCode> css_;
  css::Positions positions_;
  int rounds_ = 0;
  std::vector<Copy> copies_;  // [kind][round][copy]
};

struct Deal {
  Variant variant = Variant::SemiOffline;
  int t = 0;
  int r = 0;
  int w = 0;
  std::shared_ptr<const css::CssCode> css;
  css::Positions positions;
  shamir::FieldElement field_prime = shamir::kDefaultPrime;
  std::vector<SecretQubit> truth;   // per round; truth[r - 1] is the secret
  std::vector<int> indicator_bits;  // offline: b_j = 1 iff j = r + 1
  std::vector<ShareList> lists;     // lists[i - 1] belongs to P_i
  SharePool pool;

  int rounds() const { return r + w; }
  const SecretQubit& secret() const { return truth[static_cast<std::size_t>(r) - 1]; }
};

/// Validated dealer. Construction checks gamma, t = d and that the
/// designated positions reconstruct the secret on every measurement branch.
class Dealer {
 public:
  explicit Dealer(DealerConfig config);

  const DealerConfig& config() const { return config_; }
  Deal deal(Rng& rng) const;

 private:
  DealerConfig config_;
};

Deal generate_shares(const DealerConfig& config, Rng& rng);

}  // namespace qrss::protocol
