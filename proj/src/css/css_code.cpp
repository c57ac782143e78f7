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

#include "qrss/css/css_code.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qrss/error.h"

namespace qrss::css {
namespace {

constexpr int kMaxEnumerableBlockLength = 12;

void check_positions(const CssCode& css, std::span<const int> positions) {
  if (positions.empty()) {
    throw Error(ErrorCode::IndexOutOfRange, "no positions given");
  }
  std::vector<bool> seen(static_cast<std::size_t>(css.n()) + 1, false);
  for (int p : positions) {
    if (p < 1 || p > css.n()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "position " + std::to_string(p) + " outside [1, " +
                      std::to_string(css.n()) + "]");
    }
    if (seen[p]) {
      throw Error(ErrorCode::DuplicateQubit,
                  "position " + std::to_string(p) + " listed twice");
    }
    seen[p] = true;
  }
}

int bit_of(Word w, int position, int n) {
  return (w & gf2::position_mask(position, n)) ? 1 : 0;
}

StateVector cnot_fan(StateVector state, std::span<const int> positions) {
  for (std::size_t j = 1; j < positions.size(); ++j) {
    state = quantum::apply_cnot(std::move(state), positions[0], positions[j]);
  }
  return state;
}

std::size_t outcome_index(const std::string& outcome) {
  std::size_t v = 0;
  for (char ch : outcome) v = (v << 1) | static_cast<std::size_t>(ch == '1');
  return v;
}

Reconstruction finish(const CssCode& css, StateVector collapsed,
                      std::span<const int> positions, std::string outcome,
                      double probability) {
  const auto table = correction_table(css, positions);
  const Correction corr = table[outcome_index(outcome)];
  if (corr == Correction::X) {
    collapsed = quantum::apply_x(std::move(collapsed), positions[0]);
  }
  const int control[] = {positions[0]};
  return {std::move(outcome), probability, corr,
          quantum::reduced_density(collapsed, control)};
}

}  // namespace

CssCode build_css(const LinearCode& c, const LinearCode& c1,
                  BuildOptions options) {
  if (!gf2::check_dual_containment(c, c1)) {
    throw Error(ErrorCode::NotDualContained,
                "need G * G1^T = 0 and {0} < C1 < C");
  }
  if (c1.k() != c.k() - 1) {
    throw Error(ErrorCode::NotDualContained,
                "C1 must have dimension k - 1 = " + std::to_string(c.k() - 1) +
                    ", got " + std::to_string(c1.k()));
  }
  CssCode css(c, c1);
  for (Word w : c.codewords()) {
    (c1.contains(w) ? css.logical_zero_ : css.logical_one_).push_back(w);
  }
  if (options.ancilla_expansion && c.k() > 2) {
    if (!std::has_single_bit(static_cast<unsigned>(c.k()))) {
      throw Error(ErrorCode::KNotPowerOfTwo,
                  "ancilla expansion needs k = 2^m, got k = " + std::to_string(c.k()));
    }
    css.message_qubits_ = std::countr_zero(static_cast<unsigned>(c.k()));
  }
  return css;
}

StateVector expand_with_ancillas(const SecretQubit& secret, int m) {
  if (m < 1) {
    throw Error(ErrorCode::IndexOutOfRange, "need at least one message qubit");
  }
  StateVector state = StateVector::single(secret);
  if (m > 1) state = quantum::tensor(state, StateVector(m - 1));
  for (int q = 2; q <= m; ++q) state = quantum::apply_cnot(std::move(state), 1, q);
  return state;
}

StateVector encode_secret(const CssCode& css, const SecretQubit& secret) {
  quantum::Amplitude a_one = secret.alpha;   // weight of |0..0> -> |1>_L
  quantum::Amplitude a_zero = secret.beta;   // weight of |1..1> -> |0>_L
  if (css.message_qubits() > 0) {
    const StateVector message = expand_with_ancillas(secret, css.message_qubits());
    const auto amps = message.amplitudes();
    a_one = amps.front();
    a_zero = amps.back();
    // The CNOT fan leaves no weight on mixed message strings.
    for (std::size_t i = 1; i + 1 < amps.size(); ++i) {
      if (std::abs(amps[i]) > quantum::kConstructionTolerance) {
        throw Error(ErrorCode::NotNormalized, "message state leaked off |0..0>,|1..1>");
      }
    }
  }
  std::vector<quantum::Amplitude> amps(std::size_t{1} << css.n());
  const double s_one = 1.0 / std::sqrt(static_cast<double>(css.logical_one().size()));
  const double s_zero = 1.0 / std::sqrt(static_cast<double>(css.logical_zero().size()));
  for (Word w : css.logical_one()) amps[w] += a_one * s_one;
  for (Word w : css.logical_zero()) amps[w] += a_zero * s_zero;
  return StateVector::from_amplitudes(std::move(amps));
}

std::vector<Correction> correction_table(const CssCode& css,
                                         std::span<const int> positions) {
  check_positions(css, positions);
  const int n = css.n();
  const std::size_t targets = positions.size() - 1;
  std::vector<int> seen(std::size_t{1} << targets, -1);
  std::vector<Correction> table(seen.size(), Correction::I);
  for (Word u : css.logical_one()) {
    const int control = bit_of(u, positions[0], n);
    std::size_t outcome = 0;
    for (std::size_t j = 1; j <= targets; ++j) {
      outcome = (outcome << 1) |
                static_cast<std::size_t>(bit_of(u, positions[j], n) ^ control);
    }
    if (seen[outcome] == -1) {
      seen[outcome] = control;
      table[outcome] = control == 1 ? Correction::X : Correction::I;
    } else if (seen[outcome] != control) {
      table[outcome] = Correction::Ambiguous;
    }
  }
  return table;
}

Reconstruction reconstruct(const CssCode& css, StateVector state,
                           std::span<const int> positions, Rng& rng) {
  check_positions(css, positions);
  state = cnot_fan(std::move(state), positions);
  if (positions.size() == 1) {
    return finish(css, std::move(state), positions, "", 1.0);
  }
  auto m = quantum::measure_subset(std::move(state), positions.subspan(1), rng);
  return finish(css, std::move(m.collapsed), positions, std::move(m.outcome),
                m.probability);
}

Reconstruction reconstruct_checked(const CssCode& css, StateVector state,
                                   std::span<const int> positions,
                                   const SecretQubit& secret, Rng& rng) {
  Reconstruction r = reconstruct(css, std::move(state), positions, rng);
  const double f = r.fidelity_with(secret);
  if (f < kRecoveryFidelity) {
    throw Error(ErrorCode::NotAuthorized,
                "recovered fidelity " + std::to_string(f) + " on outcome \"" +
                    r.outcome + "\"");
  }
  return r;
}

std::vector<Reconstruction> reconstruct_all_branches(
    const CssCode& css, const StateVector& state, std::span<const int> positions) {
  check_positions(css, positions);
  StateVector fanned = cnot_fan(state, positions);
  std::vector<Reconstruction> out;
  if (positions.size() == 1) {
    out.push_back(finish(css, std::move(fanned), positions, "", 1.0));
    return out;
  }
  for (auto& branch : quantum::measurement_branches(fanned, positions.subspan(1))) {
    out.push_back(finish(css, std::move(branch.collapsed), positions,
                         std::move(branch.outcome), branch.probability));
  }
  return out;
}

bool is_authorized(const CssCode& css, std::span<const int> positions,
                   std::span<const SecretQubit> secrets) {
  for (const auto& secret : secrets) {
    const StateVector encoded = encode_secret(css, secret);
    for (const auto& r : reconstruct_all_branches(css, encoded, positions)) {
      if (r.fidelity_with(secret) < kRecoveryFidelity) return false;
    }
  }
  return true;
}

std::vector<Positions> combinations(int n, int size) {
  std::vector<Positions> out;
  if (size < 1 || size > n) return out;
  Positions cur(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == n - size + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

AccessStructure enumerate_access_structure(const CssCode& css, int trials,
                                           Rng& rng, int size) {
  if (css.n() > kMaxEnumerableBlockLength) {
    throw Error(ErrorCode::TooLarge,
                "access-structure enumeration is limited to n <= 12");
  }
  if (size == 0) size = css.d();
  std::vector<SecretQubit> secrets;
  for (int i = 0; i < std::max(trials, 1); ++i) secrets.push_back(SecretQubit::haar(rng));

  AccessStructure result;
  for (const auto& subset : combinations(css.n(), size)) {
    if (is_authorized(css, subset, secrets)) result.authorized_sets.push_back(subset);
  }
  return result;
}

int minimum_authorized_size(const CssCode& css, int trials, Rng& rng) {
  for (int size = 1; size <= css.n(); ++size) {
    if (!enumerate_access_structure(css, trials, rng, size).authorized_sets.empty()) {
      return size;
    }
  }
  return 0;
}

double subset_leakage(const CssCode& css, std::span<const int> subset,
                      const SecretQubit& a, const SecretQubit& b) {
  return quantum::trace_distance(
      quantum::reduced_density(encode_secret(css, a), subset),
      quantum::reduced_density(encode_secret(css, b), subset));
}

AccessComparison compare_access_structures(const AccessStructure& found,
                                           std::span<const Positions> expected) {
  auto norm = [](std::vector<Positions> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
  };
  const auto f = norm(found.authorized_sets);
  const auto e = norm({expected.begin(), expected.end()});
  AccessComparison cmp;
  std::set_difference(e.begin(), e.end(), f.begin(), f.end(),
                      std::back_inserter(cmp.missing));
  std::set_difference(f.begin(), f.end(), e.begin(), e.end(),
                      std::back_inserter(cmp.extra));
  cmp.match = cmp.missing.empty() && cmp.extra.empty();
  return cmp;
}

}  // namespace qrss::css
