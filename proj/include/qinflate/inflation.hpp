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
 * @file inflation.hpp
 * @brief The two inflation protocols as direct simulations, plus the
 *        Bell-component recursion relations as an independent construction
 *        of the same states (used as a correctness oracle throughout the
 *        test suite).
 *
 * Product-based (PB) rounds append one auxiliary qubit and measure the pair
 * (last pre-existing party, new party); entanglement-based (EB) rounds
 * append a fresh two-qubit copy of the seed and measure (party 2n, first
 * party of the copy).  In both schemes the measured pair's first member is
 * the more significant qubit of the POVM kernel.
 */

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qinflate/statefamilies.hpp"
#include "qinflate/weakmeas.hpp"

namespace qinflate {

enum class Scheme { PB, EB };

/// Either the fixed outcome list (one entry per round; a single entry
/// broadcasts to every round) or outcomes sampled from the branch
/// probabilities with the given stream seed.
struct OutcomePolicy {
  std::vector<int> fixed{1};
  bool sampled = false;
  std::uint64_t sample_seed = 0;
};

using SeedState = std::variant<PureState, MixedState>;

struct ProtocolConfig {
  Scheme scheme = Scheme::PB;
  SeedState seed;
  int rounds = 1;
  double lambda = 0.0;
  std::vector<AuxQubit> aux;  // PB only; length must equal rounds
  OutcomePolicy outcomes;
  bool keep_intermediates = false;
};

struct RoundRecord {
  int round = 0;
  int outcome = 0;
  double probability = 0.0;
  int party_count = 0;  // after the round
};

struct RunTrajectory {
  Scheme scheme = Scheme::PB;
  std::vector<RoundRecord> rounds;
  std::vector<SeedState> states;  // populated when keep_intermediates is set
  SeedState final_state;
  double joint_probability = 1.0;

  bool is_pure() const { return std::holds_alternative<PureState>(final_state); }
};

/// One PB round: tensor on the auxiliary, measure (N, N+1), renormalize.
MeasurementOutcome<PureState> pb_round(const PureState& state, const AuxQubit& aux,
                                       const WeakPovm& povm, int k);
MeasurementOutcome<MixedState> pb_round(const MixedState& state, const AuxQubit& aux,
                                        const WeakPovm& povm, int k);

/// One EB round: tensor on a fresh two-qubit copy, measure (2n, 2n+1).
MeasurementOutcome<PureState> eb_round(const PureState& state, const PureState& fresh_copy,
                                       const WeakPovm& povm, int k);
MeasurementOutcome<MixedState> eb_round(const MixedState& state, const MixedState& fresh_copy,
                                        const WeakPovm& povm, int k);

/// Run a full protocol.  A fixed outcome whose branch probability vanishes
/// aborts with an exception; sampled outcomes never land on such a branch.
RunTrajectory run(const ProtocolConfig& config);

/// Product of the recorded per-round probabilities, i.e. the squared norm of
/// the unnormalized chained state.  Defined for pure-state PB trajectories.
double chained_probability(const RunTrajectory& trajectory);

/// Seed families with a published round-1 Bell-component block.
enum class PbSeedFamily { MaxEntangled, Nme, Haar2, W, GhzClass, WClass };
enum class EbSeedFamily { MaxEntangled, Nme };

/// Rebuild the PB output state from the Bell-component recursion
///   a^n = m_1 [a chi+ + b chi- + c xi+ + d xi-], ...
/// instead of simulating the measurements, then normalize.  Equal to the
/// direct simulation up to a global phase.
PureState recursion_pb(PbSeedFamily family, const PureState& seed, int rounds, double lambda,
                       std::span<const AuxQubit> aux, std::span<const int> outcomes);

/// EB analogue built from the E/F entangling components.
PureState recursion_eb(EbSeedFamily family, const PureState& seed, int rounds, double lambda,
                       std::span<const int> outcomes);

}  // namespace qinflate
