// Copyright 2026 The qinflate developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file statecore.hpp
 * @brief Dense multi-qubit pure and mixed states plus the tensor-algebra
 *        primitives (tensor product, partial trace, partial transpose,
 *        Schmidt spectra) everything else is built on.
 *
 * Convention: parties are labelled 1..N and party 1 is the most significant
 * bit of the amplitude index, so index b1 b2 ... bN reads left to right like
 * a ket.  A party appended by a tensor product becomes the least significant
 * (rightmost) factor.  States are immutable after construction and all
 * operations are pure functions.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qinflate {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Construction tolerances shared by the state types.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdSlack = 1e-10;

/// Bit position (from the LSB) of 1-based party `party` in an
/// `num_parties`-qubit register.
inline int bit_position(int num_parties, int party) {
  return num_parties - party;
}

/// Normalized pure state of N >= 1 qubits.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  int num_parties() const { return num_parties_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index i) const { return amplitudes_(i); }

 private:
  Vector amplitudes_;
  int num_parties_;
};

/// Hermitian, unit-trace, positive-semidefinite density matrix of N qubits.
class MixedState {
 public:
  explicit MixedState(Matrix density);

  /// For operations whose result is positive by construction (tensor
  /// products, partial traces, measurement updates): checks Hermiticity and
  /// trace but skips the eigenvalue scan.
  static MixedState trusted(Matrix density);

  int num_parties() const { return num_parties_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  struct Trusted {};
  MixedState(Matrix density, Trusted);

  Matrix matrix_;
  int num_parties_;
};

/// A cut of the parties 1..N into two non-empty sides.  Only side A is
/// stored; side B is the complement.
class Bipartition {
 public:
  Bipartition(std::vector<int> side_a, int num_parties);

  const std::vector<int>& side_a() const { return side_a_; }
  std::vector<int> side_b() const;
  int num_parties() const { return num_parties_; }

 private:
  std::vector<int> side_a_;  // sorted, strictly inside 1..N
  int num_parties_;
};

/// Kronecker product; the left operand's parties stay most significant.
PureState tensor(const PureState& left, const PureState& right);
MixedState tensor(const MixedState& left, const MixedState& right);

/// |psi><psi| lift.  Mixing kinds in `tensor` is a compile error by design;
/// callers lift explicitly when they need a mixed register.
MixedState to_mixed(const PureState& state);

/// Trace out every party not in `keep`.  `keep` must be a non-empty proper
/// subset of 1..N; the kept parties preserve their relative order.
MixedState partial_trace(const MixedState& state, const std::vector<int>& keep);

/// Reduced density matrix of a pure state without forming the full
/// projector first.
MixedState reduced_density(const PureState& state, const std::vector<int>& keep);

/// Transpose the indices of the parties in `over`.  The result is Hermitian
/// with unit trace but generally not positive, hence a plain matrix.
Matrix partial_transpose(const MixedState& state, const std::vector<int>& over);

/// Largest eigenvalue of the reduced state on the smaller side of `cut`,
/// i.e. the squared largest Schmidt coefficient across that cut.
double max_schmidt_sq(const PureState& state, const Bipartition& cut);

/// Eigenvalues of a Hermitian matrix in descending order.  Rejects input
/// whose max |M - M^dag| entry exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

}  // namespace qinflate
