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

// CSS encoding of one secret qubit and the CNOT-fan reconstruction used by
// the share holders.
//
// Given nested codes {0} < C1 < C with G * G1^T = 0 and dim C1 = dim C - 1,
// the two cosets of C1 in C carry the logical basis:
//
//   logical_zero = C1            (contains the zero word)
//   logical_one  = C \ C1
//
// and a secret alpha|0> + beta|1> is encoded as
//
//   alpha * uniform(logical_one) + beta * uniform(logical_zero).
//
// The alpha amplitude goes on logical_one: the message |0...0> is mapped to
// |1>_L and |1...1> to |0>_L.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "qrss/gf2/linear_code.h"
#include "qrss/quantum/state.h"
#include "qrss/random.h"

namespace qrss::css {

using gf2::LinearCode;
using gf2::Word;
using quantum::DensityMatrix;
using quantum::SecretQubit;
using quantum::StateVector;

/// Fidelity a reconstruction must reach to count as recovering the secret.
inline constexpr double kRecoveryFidelity = 1.0 - 1e-9;

using Positions = std::vector<int>;

struct AccessStructure {
  std::vector<Positions> authorized_sets;  // sorted, each sorted ascending
};

struct BuildOptions {
  // Prepare alpha|0..0> + beta|1..1> on m = log2(k) message qubits before
  // mapping onto the cosets. Requires k to be a power of two when k > 2.
  bool ancilla_expansion = true;
};

class CssCode {
 public:
  int n() const { return c_.n(); }
  int k() const { return c_.k(); }
  /// Minimum distance of C; also the reconstruction threshold t.
  int d() const { return c_.min_distance(); }
  const LinearCode& code_c() const { return c_; }
  const LinearCode& code_c1() const { return c1_; }
  const std::vector<Word>& logical_zero() const { return logical_zero_; }
  const std::vector<Word>& logical_one() const { return logical_one_; }
  /// Number of message qubits m on the ancilla path; 0 on the direct path.
  int message_qubits() const { return message_qubits_; }

 private:
  CssCode(LinearCode c, LinearCode c1) : c_(std::move(c)), c1_(std::move(c1)) {}

  LinearCode c_;
  LinearCode c1_;
  std::vector<Word> logical_zero_;
  std::vector<Word> logical_one_;
  int message_qubits_ = 0;

  friend CssCode build_css(const LinearCode&, const LinearCode&, BuildOptions);
};

/// Throws NotDualContained unless check_dual_containment(c, c1) holds and
/// dim C1 = dim C - 1; KNotPowerOfTwo on the ancilla path with k not 2^m.
CssCode build_css(const LinearCode& c, const LinearCode& c1,
                  BuildOptions options = {});

/// alpha|0..0> + beta|1..1> on m qubits, built from the secret, m - 1
/// ancillas in |0> and a CNOT fan from the first qubit.
StateVector expand_with_ancillas(const SecretQubit& secret, int m);

StateVector encode_secret(const CssCode& css, const SecretQubit& secret);

enum class Correction { I, X, Ambiguous };

/// Correction to apply to the control after the CNOT fan, indexed by the
/// target outcome read as a binary number. Derived from the code: X iff the
/// alpha-branch codewords that produce the outcome hold control bit 1.
/// Outcomes that no alpha-branch word produces default to I.
std::vector<Correction> correction_table(const CssCode& css,
                                         std::span<const int> positions);

struct Reconstruction {
  std::string outcome;  // target bits, in positions[1..] order
  double probability = 1.0;
  Correction correction = Correction::I;
  DensityMatrix control;  // control qubit after the correction

  SecretQubit recovered() const { return control.principal_state(); }
  double fidelity_with(const SecretQubit& secret) const {
    return quantum::fidelity(secret, control);
  }
};

/// CNOT from positions[0] onto each later position, measure the targets,
/// correct the control. Throws IndexOutOfRange / DuplicateQubit on bad
/// positions.
Reconstruction reconstruct(const CssCode& css, StateVector state,
                           std::span<const int> positions, Rng& rng);

/// Diagnostic form with a known secret: throws NotAuthorized if the recovered
/// control has fidelity below kRecoveryFidelity.
Reconstruction reconstruct_checked(const CssCode& css, StateVector state,
                                   std::span<const int> positions,
                                   const SecretQubit& secret, Rng& rng);

/// Every measurement branch with its Born weight instead of a sampled one.
std::vector<Reconstruction> reconstruct_all_branches(
    const CssCode& css, const StateVector& state, std::span<const int> positions);

/// Branch-exhaustive: authorized iff every branch for every secret recovers
/// the secret with fidelity >= kRecoveryFidelity.
bool is_authorized(const CssCode& css, std::span<const int> positions,
                   std::span<const SecretQubit> secrets);

/// Brute force over all subsets of `size` positions (default d) using
/// `trials` Haar-random secrets. Requires n <= 12.
AccessStructure enumerate_access_structure(const CssCode& css, int trials,
                                           Rng& rng, int size = 0);

/// Smallest subset size with at least one authorized subset, 0 if none up to n.
int minimum_authorized_size(const CssCode& css, int trials, Rng& rng);

/// Trace distance between the reduced states on `subset` for two secrets.
double subset_leakage(const CssCode& css, std::span<const int> subset,
                      const SecretQubit& a, const SecretQubit& b);

struct AccessComparison {
  bool match = false;
  std::vector<Positions> missing;  // expected but not found
  std::vector<Positions> extra;    // found but not expected
};

AccessComparison compare_access_structures(const AccessStructure& found,
                                           std::span<const Positions> expected);

std::vector<Positions> combinations(int n, int size);

}  // namespace qrss::css
