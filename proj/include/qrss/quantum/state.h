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

// Dense state-vector simulation over at most 16 qubits.
//
// Qubits are numbered from 1, and qubit 1 is the leftmost character of a ket
// string: in |0110>, qubit 1 is 0 and qubit 4 is 0. Basis index i of a
// q-qubit register therefore has qubit p in bit (q - p).
//
// Gate and measurement functions take the state by value and return the
// result, so callers that no longer need the input can std::move it in.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrss/random.h"

namespace qrss::quantum {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 16;
inline constexpr double kConstructionTolerance = 1e-12;
inline constexpr double kRuntimeTolerance = 1e-10;

/// alpha|0> + beta|1>.
struct SecretQubit {
  Amplitude alpha{1.0, 0.0};
  Amplitude beta{0.0, 0.0};

  /// Throws NotNormalized unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  static SecretQubit make(Amplitude alpha, Amplitude beta);
  /// Rescales to unit norm; throws NotNormalized for the zero vector.
  static SecretQubit normalized(Amplitude alpha, Amplitude beta);
  static SecretQubit zero() { return {{1.0, 0.0}, {0.0, 0.0}}; }
  static SecretQubit one() { return {{0.0, 0.0}, {1.0, 0.0}}; }
  /// Haar-random pure state: two standard complex normals, normalized.
  static SecretQubit haar(Rng& rng);
};

class DensityMatrix {
 public:
  /// Throws NotNormalized unless Hermitian, unit trace and PSD within 1e-10.
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  static DensityMatrix pure(const SecretQubit& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Amplitude operator()(int r, int c) const { return entries_(r, c); }
  double purity() const;

  /// Dominant eigenvector of a single-qubit state, with a real non-negative
  /// leading component. Exact for pure states.
  SecretQubit principal_state() const;

 private:
  Eigen::MatrixXcd entries_;
};

class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Throws IndexOutOfRange for a size that is not 2^q with 1 <= q <= 16 and
  /// NotNormalized if the norm is off by more than 1e-10.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);
  static StateVector basis(std::string_view bits);
  static StateVector single(const SecretQubit& psi);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_[index]; }
  Amplitude amplitude(std::string_view bits) const;
  double norm_squared() const;

  /// Bit of basis index `index` that holds 1-based `qubit`.
  std::uint64_t qubit_mask(int qubit) const {
    return std::uint64_t{1} << (num_qubits_ - qubit);
  }

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;

  friend StateVector apply_x(StateVector, int);
  friend StateVector apply_cnot(StateVector, int, int);
  friend StateVector postselect(StateVector, std::span<const int>,
                                std::string_view);
  friend StateVector tensor(const StateVector&, const StateVector&);
};

/// Kronecker product; qubits of `b` follow those of `a`.
StateVector tensor(const StateVector& a, const StateVector& b);

StateVector apply_x(StateVector state, int qubit);
StateVector apply_cnot(StateVector state, int control, int target);

struct Measurement {
  std::string outcome;  // one character per measured qubit, in request order
  double probability = 0.0;
  StateVector collapsed;
};

/// Samples a computational-basis outcome for `qubits` with Born weights and
/// returns the renormalized post-measurement state.
Measurement measure_subset(StateVector state, std::span<const int> qubits,
                           Rng& rng);

/// Probability of every outcome string for `qubits`, indexed by the outcome
/// read as a binary number (first listed qubit most significant).
std::vector<double> outcome_probabilities(const StateVector& state,
                                          std::span<const int> qubits);

/// Projects onto `outcome` and renormalizes. Throws NotNormalized if the
/// outcome has zero probability.
StateVector postselect(StateVector state, std::span<const int> qubits,
                       std::string_view outcome);

/// Every outcome with probability above `min_probability`, in ascending
/// outcome order, with its collapsed state.
std::vector<Measurement> measurement_branches(const StateVector& state,
                                              std::span<const int> qubits,
                                              double min_probability = 1e-14);

/// Partial trace down to `keep`; the first kept qubit is the most significant
/// bit of the reduced basis index.
DensityMatrix reduced_density(const StateVector& state,
                              std::span<const int> keep);

double fidelity(const SecretQubit& a, const SecretQubit& b);
/// <psi| rho |psi> for a single-qubit rho.
double fidelity(const SecretQubit& psi, const DensityMatrix& rho);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qrss::quantum
