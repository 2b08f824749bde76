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
 * @file statefamilies.hpp
 * @brief Constructors and seeded samplers for every input family of the
 *        inflation protocols: the NME line, Haar-uniform pure states, GHZ/W
 *        and their classes, the Werner state, and single-qubit auxiliaries.
 */

#pragma once

#include <cstdint>
#include <random>

#include "qinflate/statecore.hpp"

namespace qinflate {

/// Auxiliary qubit |chi+> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct AuxQubit {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

/// Deterministic stream of Gaussian/uniform variates.  Ensembles derive one
/// stream per sample via derive_seed so results do not depend on thread
/// scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// splitmix64 hash of (master, index); used to split one master seed into
/// independent per-sample streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Samples with residual tangle below this are re-drawn by
/// ghz_class_random; the full-support ansatz is GHZ-class with probability
/// one, so the rejection only removes numerically ambiguous states.
inline constexpr double kTangleFloor = 1e-6;

PureState aux_state(const AuxQubit& aux);

/// cos z |00> + sin z |11> for z in [0, pi/4]; z = pi/4 is |phi+>.
PureState nme(double z);

/// The maximally entangled two-qubit seed |phi+>.
PureState phi_plus();

PureState ghz();
PureState w_state();
/// cos z |000> + sin z |111>, z in [0, pi/4].
PureState gghz(double z);

/// Haar-uniform pure state of 2 or 3 qubits: i.i.d. complex Gaussian
/// amplitudes, normalized.
PureState haar_pure(int n_qubits, Rng& rng);

/// Haar sample over the full three-qubit ansatz, re-drawn until its tangle
/// exceeds kTangleFloor (GHZ class).
PureState ghz_class_random(Rng& rng);

/// Haar sample over a|000> + b|010> + c|001> + d|100> (W class; the tangle
/// vanishes identically on this ansatz).
PureState w_class_random(Rng& rng);

/// p |phi+><phi+| + (1-p) I/4.
MixedState werner(double p);

}  // namespace qinflate
