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
 * @file weakmeas.hpp
 * @brief The Bell-diagonal weak POVM family M_k(lambda) and its application
 *        to a chosen qubit pair of a pure or mixed register.
 *
 * Outcome indices run 1..4 and are tied to the Bell vectors in the order
 * psi+, psi-, phi+, phi-.  lambda = 1 is the projective Bell measurement,
 * lambda = 0 acts as the identity channel up to a global factor.
 */

#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qinflate/statecore.hpp"

namespace qinflate {

/// Outcomes with probability below this are reported without a post state.
inline constexpr double kZeroProbabilityTol = 1e-14;

/// Bell vectors as columns (psi+, psi-, phi+, phi-), first measured party as
/// the more significant qubit:
///   phi+- = (|00> +- |11>)/sqrt2,  psi+- = (|01> +- |10>)/sqrt2.
const Eigen::Matrix4cd& bell_basis();

/// Column k (1..4) of bell_basis().
Eigen::Vector4cd bell_vector(int k);

/// The four-element weak POVM with sharpness lambda in [0,1]:
///   M_k = lambda |Bell_k><Bell_k| + (1 - lambda) I/4.
/// Every element is Bell-diagonal, so the operator square roots are formed
/// in closed form from the f coefficients
///   f_k^k = sqrt((1+3 lambda)/4),   f_k^{i!=k} = sqrt((1-lambda)/4).
class WeakPovm {
 public:
  static constexpr int kNumOutcomes = 4;

  explicit WeakPovm(double lambda);

  double lambda() const { return lambda_; }
  /// M_k for k in 1..4.
  const Eigen::Matrix4cd& element(int k) const { return elements_[check(k)]; }
  /// sqrt(M_k) for k in 1..4.
  const Eigen::Matrix4cd& root(int k) const { return roots_[check(k)]; }
  /// f_k^i for k, i in 1..4.
  double fcoeff(int k, int i) const { return fcoeffs_[check(k)][check(i)]; }

 private:
  static int check(int k);

  double lambda_;
  std::array<Eigen::Matrix4cd, 4> elements_;
  std::array<Eigen::Matrix4cd, 4> roots_;
  std::array<std::array<double, 4>, 4> fcoeffs_;
};

WeakPovm build_povm(double lambda);

/// One measurement branch: outcome index, its probability, and the
/// renormalized post-measurement state.  When the branch probability falls
/// below kZeroProbabilityTol the post state is absent rather than a division
/// by ~0.
template <typename StateT>
struct MeasurementOutcome {
  int k = 0;
  double probability = 0.0;
  std::optional<StateT> post_state;

  bool has_state() const { return post_state.has_value(); }
};

/// Apply sqrt(M_k) to the (first, second) party pair and renormalize.  The
/// first pair member is the more significant qubit of the 4x4 kernel.
MeasurementOutcome<PureState> apply_outcome(const PureState& state, std::pair<int, int> pair,
                                            const WeakPovm& povm, int k);
MeasurementOutcome<MixedState> apply_outcome(const MixedState& state, std::pair<int, int> pair,
                                             const WeakPovm& povm, int k);

/// Probabilities of the four outcomes; they sum to 1 by POVM completeness.
std::array<double, 4> outcome_distribution(const PureState& state, std::pair<int, int> pair,
                                           const WeakPovm& povm);
std::array<double, 4> outcome_distribution(const MixedState& state, std::pair<int, int> pair,
                                           const WeakPovm& povm);

}  // namespace qinflate
