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

#include "qrss/quantum/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "qrss/error.h"
#include "qrss/quantum/kernels.h"

namespace qrss::quantum {
namespace {

void check_qubit(int qubit, int num_qubits) {
  if (qubit < 1 || qubit > num_qubits) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside [1, " +
                    std::to_string(num_qubits) + "]");
  }
}

void check_qubit_list(std::span<const int> qubits, int num_qubits) {
  std::uint64_t seen = 0;
  for (int q : qubits) {
    check_qubit(q, num_qubits);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      throw Error(ErrorCode::DuplicateQubit,
                  "qubit " + std::to_string(q) + " listed twice");
    }
    seen |= bit;
  }
}

// Basis-index bits of `qubits`; masks[j] belongs to qubits[j].
std::vector<std::uint64_t> masks_for(const StateVector& s,
                                     std::span<const int> qubits) {
  std::vector<std::uint64_t> masks;
  masks.reserve(qubits.size());
  for (int q : qubits) masks.push_back(s.qubit_mask(q));
  return masks;
}

// Reads the listed qubits of basis index `i` as a number, first qubit most
// significant.
std::uint64_t gather(std::uint64_t i, std::span<const std::uint64_t> masks) {
  std::uint64_t out = 0;
  for (std::uint64_t m : masks) out = (out << 1) | static_cast<std::uint64_t>((i & m) != 0);
  return out;
}

// Inverse of gather: places outcome bits onto their basis-index positions.
std::uint64_t scatter(std::uint64_t outcome,
                      std::span<const std::uint64_t> masks) {
  std::uint64_t out = 0;
  const std::size_t m = masks.size();
  for (std::size_t j = 0; j < m; ++j) {
    if ((outcome >> (m - 1 - j)) & 1U) out |= masks[j];
  }
  return out;
}

std::string outcome_string(std::uint64_t outcome, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((outcome >> (width - 1 - j)) & 1U) s[j] = '1';
  }
  return s;
}

std::uint64_t parse_outcome(std::string_view outcome, std::size_t width) {
  if (outcome.size() != width) {
    throw Error(ErrorCode::DimensionMismatch,
                "outcome \"" + std::string(outcome) + "\" does not match " +
                    std::to_string(width) + " measured qubits");
  }
  std::uint64_t v = 0;
  for (char ch : outcome) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::DimensionMismatch,
                  "outcome must be a bit string, got \"" + std::string(outcome) + "\"");
    }
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return v;
}

// (smallest, largest) eigenvalue of a 2x2 Hermitian matrix.
std::pair<double, double> qubit_eigenvalues(const Eigen::MatrixXcd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mid = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::sqrt(half * half + std::norm(m(0, 1)));
  return {mid - r, mid + r};
}

}  // namespace

SecretQubit SecretQubit::make(Amplitude alpha, Amplitude beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > kConstructionTolerance) {
    throw Error(ErrorCode::NotNormalized,
                "|alpha|^2 + |beta|^2 = " + std::to_string(n));
  }
  return {alpha, beta};
}

SecretQubit SecretQubit::normalized(Amplitude alpha, Amplitude beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (n == 0.0) throw Error(ErrorCode::NotNormalized, "zero vector");
  return {alpha / n, beta / n};
}

SecretQubit SecretQubit::haar(Rng& rng) {
  const Amplitude a{standard_normal(rng), standard_normal(rng)};
  const Amplitude b{standard_normal(rng), standard_normal(rng)};
  return normalized(a, b);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  const Amplitude tr = entries_.trace();
  if (herm > kRuntimeTolerance || std::abs(tr - Amplitude{1.0}) > kRuntimeTolerance) {
    throw Error(ErrorCode::NotNormalized,
                "not a density matrix (hermiticity error " + std::to_string(herm) +
                    ", trace " + std::to_string(tr.real()) + ")");
  }
  double min_eig = 0.0;
  if (entries_.rows() == 2) {
    min_eig = qubit_eigenvalues(entries_).first;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
    min_eig = es.eigenvalues().minCoeff();
  }
  if (min_eig < -kRuntimeTolerance) {
    throw Error(ErrorCode::NotNormalized, "density matrix is not positive");
  }
}

DensityMatrix DensityMatrix::pure(const SecretQubit& psi) {
  Eigen::Vector2cd v(psi.alpha, psi.beta);
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

SecretQubit DensityMatrix::principal_state() const {
  if (dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "principal_state needs a 2x2 matrix");
  }
  const double a = entries_(0, 0).real();
  const double d = entries_(1, 1).real();
  const Amplitude b = entries_(0, 1);
  const double top = qubit_eigenvalues(entries_).second;
  // Null vector of rho - top * I from whichever row is better conditioned.
  Eigen::Vector2cd v(b, top - a);
  const Eigen::Vector2cd w(top - d, std::conj(b));
  if (w.squaredNorm() > v.squaredNorm()) v = w;
  if (v.squaredNorm() < 1e-300) v = Eigen::Vector2cd(a >= d ? 1.0 : 0.0, a >= d ? 0.0 : 1.0);
  const int lead = std::abs(v(0)) > 1e-12 * v.norm() ? 0 : 1;
  v *= std::conj(v(lead)) / std::abs(v(lead));
  return SecretQubit::normalized(v(0), v(1));
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qubit count " + std::to_string(num_qubits) + " outside [1, 16]");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n) || n > (std::size_t{1} << kMaxQubits)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "amplitude count " + std::to_string(n) +
                    " is not 2^q for 1 <= q <= 16");
  }
  const double norm = kernels::norm_squared(amplitudes);
  if (std::abs(norm - 1.0) > kRuntimeTolerance) {
    throw Error(ErrorCode::NotNormalized, "state norm^2 = " + std::to_string(norm));
  }
  return StateVector(std::countr_zero(n), std::move(amplitudes));
}

StateVector StateVector::basis(std::string_view bits) {
  StateVector s(static_cast<int>(bits.size()));
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[parse_outcome(bits, bits.size())] = 1.0;
  return s;
}

StateVector StateVector::single(const SecretQubit& psi) {
  return from_amplitudes({psi.alpha, psi.beta});
}

Amplitude StateVector::amplitude(std::string_view bits) const {
  return amplitudes_[parse_outcome(bits, static_cast<std::size_t>(num_qubits_))];
}

double StateVector::norm_squared() const { return kernels::norm_squared(amplitudes_); }

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int q = a.num_qubits() + b.num_qubits();
  if (q > kMaxQubits) {
    throw Error(ErrorCode::IndexOutOfRange, "tensor product exceeds 16 qubits");
  }
  std::vector<Amplitude> out;
  out.reserve(a.dim() * b.dim());
  for (Amplitude x : a.amplitudes_) {
    for (Amplitude y : b.amplitudes_) out.push_back(x * y);
  }
  return StateVector(q, std::move(out));
}

StateVector apply_x(StateVector state, int qubit) {
  check_qubit(qubit, state.num_qubits());
  kernels::swap_pairs(state.amplitudes_, state.qubit_mask(qubit), 0);
  return state;
}

StateVector apply_cnot(StateVector state, int control, int target) {
  check_qubit(control, state.num_qubits());
  check_qubit(target, state.num_qubits());
  if (control == target) {
    throw Error(ErrorCode::ControlEqualsTarget,
                "control and target are both qubit " + std::to_string(control));
  }
  kernels::swap_pairs(state.amplitudes_, state.qubit_mask(target),
                      state.qubit_mask(control));
  return state;
}

std::vector<double> outcome_probabilities(const StateVector& state,
                                          std::span<const int> qubits) {
  check_qubit_list(qubits, state.num_qubits());
  const auto masks = masks_for(state, qubits);
  std::vector<double> weights(state.dim());
  kernels::abs_squared(state.amplitudes(), weights);
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    probs[gather(i, masks)] += weights[i];
  }
  return probs;
}

StateVector postselect(StateVector state, std::span<const int> qubits,
                       std::string_view outcome) {
  check_qubit_list(qubits, state.num_qubits());
  const auto masks = masks_for(state, qubits);
  std::uint64_t mask = 0;
  for (auto m : masks) mask |= m;
  const std::uint64_t value = scatter(parse_outcome(outcome, qubits.size()), masks);
  kernels::project_scale(state.amplitudes_, mask, value, 1.0);
  const double p = kernels::norm_squared(state.amplitudes_);
  if (!(p > 0.0)) {
    throw Error(ErrorCode::NotNormalized,
                "outcome " + std::string(outcome) + " has zero probability");
  }
  kernels::project_scale(state.amplitudes_, 0, 0, 1.0 / std::sqrt(p));
  return state;
}

Measurement measure_subset(StateVector state, std::span<const int> qubits,
                           Rng& rng) {
  const auto probs = outcome_probabilities(state, qubits);
  const double u = uniform01(rng);
  double cumulative = 0.0;
  std::size_t pick = probs.size();
  for (std::size_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= 0.0) continue;
    cumulative += probs[o];
    pick = o;
    if (u < cumulative) break;
  }
  const std::string outcome = outcome_string(pick, qubits.size());
  return {outcome, probs[pick], postselect(std::move(state), qubits, outcome)};
}

std::vector<Measurement> measurement_branches(const StateVector& state,
                                              std::span<const int> qubits,
                                              double min_probability) {
  const auto probs = outcome_probabilities(state, qubits);
  std::vector<Measurement> out;
  for (std::size_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= min_probability) continue;
    const std::string outcome = outcome_string(o, qubits.size());
    out.push_back({outcome, probs[o], postselect(state, qubits, outcome)});
  }
  return out;
}

DensityMatrix reduced_density(const StateVector& state, std::span<const int> keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::IndexOutOfRange, "reduced_density needs at least one qubit");
  }
  check_qubit_list(keep, state.num_qubits());
  const auto masks = masks_for(state, keep);
  std::uint64_t keep_mask = 0;
  for (auto m : masks) keep_mask |= m;
  const int dim = 1 << keep.size();

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) offsets[a] = scatter(static_cast<std::uint64_t>(a), masks);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Amplitude> slice(static_cast<std::size_t>(dim));
  const auto amps = state.amplitudes();
  for (std::uint64_t rest = 0; rest < state.dim(); ++rest) {
    if (rest & keep_mask) continue;
    bool any = false;
    for (int a = 0; a < dim; ++a) {
      slice[a] = amps[rest | offsets[a]];
      any |= slice[a] != Amplitude{};
    }
    if (!any) continue;
    for (int c = 0; c < dim; ++c) {
      const Amplitude cc = std::conj(slice[c]);
      for (int r = 0; r < dim; ++r) rho(r, c) += slice[r] * cc;
    }
  }
  return DensityMatrix(std::move(rho));
}

double fidelity(const SecretQubit& a, const SecretQubit& b) {
  return std::norm(std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta);
}

double fidelity(const SecretQubit& psi, const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "fidelity needs a single-qubit state");
  }
  const Eigen::Vector2cd v(psi.alpha, psi.beta);
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()) + " differ");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.matrix() - b.matrix(),
                                                     Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qrss::quantum
