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
 * @file entmeasures.hpp
 * @brief Entanglement quantifiers: generalized geometric measure (GGM),
 *        concurrence, tangle, negativity, logarithmic negativity, negativity
 *        monogamy score, and local von Neumann entropy.  Logs are base 2.
 */

#pragma once

#include "qinflate/statecore.hpp"

namespace qinflate {

/// Which bipartitions the GGM maximization scans.  `All` walks every
/// non-trivial cut (one representative per complement pair); `Reduced`
/// restricts to single-site and nearest-neighbor two-site marginals, which
/// is where the maximum was always found to live for the inflation outputs.
enum class CutPolicy { All, Reduced };

/// All cuts up to 7 parties, the reduced scan beyond that.
CutPolicy default_cut_policy(int num_parties);

struct GgmReport {
  double value;              // 1 - argmax_eigenvalue
  Bipartition argmax_cut;    // cut achieving the maximum
  double argmax_eigenvalue;  // largest squared Schmidt coefficient
};

/// GGM of a pure state: 1 minus the largest squared Schmidt coefficient over
/// the scanned bipartitions.  N = 2 is permitted and degenerates to
/// 1 - max Schmidt^2; single-party states are rejected.
GgmReport ggm(const PureState& state, CutPolicy policy);
GgmReport ggm(const PureState& state);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const MixedState& state);

/// Residual tangle of a pure three-qubit state,
///   C^2(A1 : A2 A3) - C^2(rho_A1A2) - C^2(rho_A1A3),
/// with the one-vs-rest term evaluated as 4 det(rho_A1).  Zero (up to
/// round-off) exactly on the W class.
double tangle(const PureState& state);

/// Sum of |negative eigenvalues| of the partial transpose across `cut`,
/// equal to (||rho^T_B||_1 - 1)/2.
double negativity(const MixedState& state, const Bipartition& cut);

/// log2(2 negativity + 1).
double log_negativity(const MixedState& state, const Bipartition& cut);

struct MonogamyReport {
  double value = 0.0;        // focus_vs_rest - sum(pairwise)
  int focus_party = 0;
  double focus_vs_rest = 0.0;
  std::vector<double> pairwise;  // one entry per non-focus party, in order
};

/// Negativity monogamy score delta_N with respect to `focus`; requires at
/// least three parties.
MonogamyReport monogamy_score_negativity(const MixedState& state, int focus);

/// Von Neumann entropy (ebits) of one marginal of a two-qubit pure state.
double entanglement_entropy(const PureState& state);

}  // namespace qinflate
