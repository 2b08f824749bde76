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

#include "qinflate/inflation.hpp"

#include <cmath>

namespace qinflate {

namespace {

Vector kron(const Vector& left, const Vector& right) {
  Vector out(left.size() * right.size());
  for (Eigen::Index i = 0; i < left.size(); ++i)
    out.segment(i * right.size(), right.size()) = left(i) * right;
  return out;
}

// m_j for one round: sqrt(1+3 lambda) on the clicked outcome, sqrt(1-lambda)
// elsewhere.
std::array<double, 4> m_coeffs(double lambda, int outcome) {
  if (outcome < 1 || outcome > 4)
    throw std::invalid_argument("recursion: outcome index must be in 1..4");
  std::array<double, 4> m;
  for (int j = 0; j < 4; ++j)
    m[j] = (j == outcome - 1) ? std::sqrt(1.0 + 3.0 * lambda) : std::sqrt(1.0 - lambda);
  return m;
}

int fixed_outcome(const OutcomePolicy& policy, int round_index) {
  if (policy.fixed.empty())
    throw std::invalid_argument("run: fixed outcome policy requires at least one outcome");
  const int k = policy.fixed.size() == 1
                    ? policy.fixed.front()
                    : policy.fixed.at(static_cast<std::size_t>(round_index));
  if (k < 1 || k > 4) throw std::invalid_argument("run: outcome index must be in 1..4");
  return k;
}

template <typename StateT>
int sample_outcome(const StateT& state, std::pair<int, int> pair, const WeakPovm& povm, Rng& rng) {
  const auto probs = outcome_distribution(state, pair, povm);
  const double u = rng.uniform();
  double acc = 0.0;
  for (int k = 1; k <= 4; ++k) {
    acc += probs[k - 1];
    if (u < acc) return k;
  }
  return 4;
}

struct AuxVectors {
  Vector chi_plus, chi_minus, xi_plus, xi_minus;
};

AuxVectors aux_vectors(const AuxQubit& aux) {
  const Complex alpha = std::cos(aux.theta / 2.0);
  const Complex beta = std::polar(std::sin(aux.theta / 2.0), aux.phi);
  AuxVectors v;
  v.chi_plus = Vector(2);
  v.chi_plus << alpha, beta;
  v.chi_minus = Vector(2);
  v.chi_minus << alpha, -beta;
  v.xi_plus = Vector(2);
  v.xi_plus << beta, alpha;
  v.xi_minus = Vector(2);
  v.xi_minus << beta, -alpha;
  return v;
}

void require_close(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Round-1 Bell components (before the outcome coefficients) for each seed
// family.  Ordered to pair with (psi+, psi-, phi+, phi-).
std::array<Vector, 4> round1_structure(PbSeedFamily family, const PureState& seed,
                                       const AuxQubit& aux) {
  const Complex alpha = std::cos(aux.theta / 2.0);
  const Complex beta = std::polar(std::sin(aux.theta / 2.0), aux.phi);
  const Vector& s = seed.amplitudes();

  auto two_qubit_block = [&](const Vector& v0, const Vector& v1) {
    // Generic 2-qubit-seed block: v0/v1 are the A2 = 0/1 branches on A1.
    return std::array<Vector, 4>{beta * v0 + alpha * v1, beta * v0 - alpha * v1,
                                 alpha * v0 + beta * v1, alpha * v0 - beta * v1};
  };

  switch (family) {
    case PbSeedFamily::MaxEntangled: {
      require_close(seed.num_parties() == 2, "recursion_pb: MaxEntangled expects a 2-qubit seed");
      require_close((seed.amplitudes() - phi_plus().amplitudes()).norm() < 1e-12,
                    "recursion_pb: seed is not |phi+>");
      std::array<Vector, 4> out;
      const AuxVectors v = aux_vectors(aux);
      out[0] = v.xi_plus;
      out[1] = v.xi_minus;
      out[2] = v.chi_plus;
      out[3] = v.chi_minus;
      return out;
    }
    case PbSeedFamily::Nme: {
      require_close(seed.num_parties() == 2 && std::abs(s(1)) < 1e-12 && std::abs(s(2)) < 1e-12 &&
                        std::abs(s(0).imag()) < 1e-12 && std::abs(s(3).imag()) < 1e-12,
                    "recursion_pb: Nme expects cos z |00> + sin z |11>");
      const double cz = s(0).real();
      const double sz = s(3).real();
      std::array<Vector, 4> out;
      for (auto& v : out) v = Vector(2);
      out[0] << beta * cz, alpha * sz;
      out[1] << beta * cz, -alpha * sz;
      out[2] << alpha * cz, beta * sz;
      out[3] << alpha * cz, -beta * sz;
      return out;
    }
    case PbSeedFamily::Haar2: {
      require_close(seed.num_parties() == 2, "recursion_pb: Haar2 expects a 2-qubit seed");
      Vector v0(2), v1(2);
      v0 << s(0), s(2);
      v1 << s(1), s(3);
      return two_qubit_block(v0, v1);
    }
    case PbSeedFamily::W: {
      require_close(seed.num_parties() == 3 &&
                        (seed.amplitudes() - w_state().amplitudes()).norm() < 1e-12,
                    "recursion_pb: W expects the |W> seed");
      // sqrt2 psi+ = |01> + |10>; the seed's 1/sqrt3 is restored by the
      // final normalization.
      Vector root2_psi_plus = Vector::Zero(4);
      root2_psi_plus(1) = 1.0;
      root2_psi_plus(2) = 1.0;
      Vector e00 = Vector::Zero(4);
      e00(0) = 1.0;
      return std::array<Vector, 4>{beta * root2_psi_plus + alpha * e00,
                                   beta * root2_psi_plus - alpha * e00,
                                   alpha * root2_psi_plus + beta * e00,
                                   alpha * root2_psi_plus - beta * e00};
    }
    case PbSeedFamily::GhzClass: {
      require_close(seed.num_parties() == 3, "recursion_pb: GhzClass expects a 3-qubit seed");
      Vector x(4), y(4);
      x << s(0), s(2), s(4), s(6);  // A3 = 0 branch on (A1, A2)
      y << s(1), s(3), s(5), s(7);  // A3 = 1 branch
      return std::array<Vector, 4>{beta * x + alpha * y, beta * x - alpha * y,
                                   alpha * x + beta * y, alpha * x - beta * y};
    }
    case PbSeedFamily::WClass: {
      require_close(seed.num_parties() == 3 && std::abs(s(3)) < 1e-12 && std::abs(s(5)) < 1e-12 &&
                        std::abs(s(6)) < 1e-12 && std::abs(s(7)) < 1e-12,
                    "recursion_pb: WClass expects a|000> + b|010> + c|001> + d|100>");
      Vector z = Vector::Zero(4);
      z << s(0), s(2), s(4), Complex(0.0);
      Vector c00 = Vector::Zero(4);
      c00(0) = s(1);
      return std::array<Vector, 4>{beta * z + alpha * c00, beta * z - alpha * c00,
                                   alpha * z + beta * c00, alpha * z - beta * c00};
    }
  }
  throw std::invalid_argument("recursion_pb: unsupported seed family");
}

int spanned_outcome(std::span<const int> outcomes, int round_index, int rounds) {
  if (outcomes.empty()) return 1;
  if (outcomes.size() == 1) return outcomes[0];
  if (static_cast<int>(outcomes.size()) != rounds)
    throw std::invalid_argument("recursion: outcome list must match the round count");
  return outcomes[static_cast<std::size_t>(round_index)];
}

}  // namespace

MeasurementOutcome<PureState> pb_round(const PureState& state, const AuxQubit& aux,
                                       const WeakPovm& povm, int k) {
  if (state.num_parties() < 2)
    throw std::invalid_argument("pb_round: state must have at least two parties");
  const int n = state.num_parties();
  return apply_outcome(tensor(state, aux_state(aux)), {n, n + 1}, povm, k);
}

MeasurementOutcome<MixedState> pb_round(const MixedState& state, const AuxQubit& aux,
                                        const WeakPovm& povm, int k) {
  if (state.num_parties() < 2)
    throw std::invalid_argument("pb_round: state must have at least two parties");
  const int n = state.num_parties();
  return apply_outcome(tensor(state, to_mixed(aux_state(aux))), {n, n + 1}, povm, k);
}

MeasurementOutcome<PureState> eb_round(const PureState& state, const PureState& fresh_copy,
                                       const WeakPovm& povm, int k) {
  if (state.num_parties() % 2 != 0)
    throw std::invalid_argument("eb_round: state party count must be even");
  if (fresh_copy.num_parties() != 2)
    throw std::invalid_argument("eb_round: the appended copy must be a two-qubit state");
  const int n = state.num_parties();
  return apply_outcome(tensor(state, fresh_copy), {n, n + 1}, povm, k);
}

MeasurementOutcome<MixedState> eb_round(const MixedState& state, const MixedState& fresh_copy,
                                        const WeakPovm& povm, int k) {
  if (state.num_parties() % 2 != 0)
    throw std::invalid_argument("eb_round: state party count must be even");
  if (fresh_copy.num_parties() != 2)
    throw std::invalid_argument("eb_round: the appended copy must be a two-qubit state");
  const int n = state.num_parties();
  return apply_outcome(tensor(state, fresh_copy), {n, n + 1}, povm, k);
}

RunTrajectory run(const ProtocolConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("run: rounds must be >= 1");
  if (config.scheme == Scheme::PB &&
      static_cast<int>(config.aux.size()) != config.rounds)
    throw std::invalid_argument("run: PB needs one auxiliary parameter set per round");
  if (!config.outcomes.sampled && config.outcomes.fixed.size() > 1 &&
      static_cast<int>(config.outcomes.fixed.size()) != config.rounds)
    throw std::invalid_argument("run: fixed outcome list must match the round count");

  const WeakPovm povm(config.lambda);
  Rng rng(config.outcomes.sample_seed);

  RunTrajectory trajectory{config.scheme, {}, {}, config.seed, 1.0};

  const int seed_parties = std::visit([](const auto& s) { return s.num_parties(); }, config.seed);

  for (int round = 1; round <= config.rounds; ++round) {
    const int expected_parties =
        config.scheme == Scheme::PB ? seed_parties + round : seed_parties + 2 * round;

    auto step = [&](auto& state) -> RoundRecord {
      using StateT = std::decay_t<decltype(state)>;
      const int before = state.num_parties();
      const std::pair<int, int> pair{before, before + 1};
      int k;
      if (config.outcomes.sampled) {
        if (config.scheme == Scheme::PB) {
          const auto grown = tensor(state, [&] {
            if constexpr (std::is_same_v<StateT, PureState>)
              return aux_state(config.aux[round - 1]);
            else
              return to_mixed(aux_state(config.aux[round - 1]));
          }());
          k = sample_outcome(grown, pair, povm, rng);
        } else {
          const auto grown = tensor(state, [&] {
            if constexpr (std::is_same_v<StateT, PureState>)
              return std::get<PureState>(config.seed);
            else
              return std::get<MixedState>(config.seed);
          }());
          k = sample_outcome(grown, pair, povm, rng);
        }
      } else {
        k = fixed_outcome(config.outcomes, round - 1);
      }

      MeasurementOutcome<StateT> outcome = [&] {
        if (config.scheme == Scheme::PB) {
          return pb_round(state, config.aux[round - 1], povm, k);
        }
        if constexpr (std::is_same_v<StateT, PureState>)
          return eb_round(state, std::get<PureState>(config.seed), povm, k);
        else
          return eb_round(state, std::get<MixedState>(config.seed), povm, k);
      }();

      if (!outcome.has_state())
        throw std::runtime_error("run: requested outcome " + std::to_string(k) +
                                 " has vanishing probability in round " + std::to_string(round));
      state = std::move(*outcome.post_state);
      return RoundRecord{round, k, outcome.probability, state.num_parties()};
    };

    RoundRecord record = std::visit(step, trajectory.final_state);
    if (record.party_count != expected_parties)
      throw std::logic_error("run: party count drifted from the protocol arithmetic");
    trajectory.joint_probability *= record.probability;
    trajectory.rounds.push_back(record);
    if (config.keep_intermediates) trajectory.states.push_back(trajectory.final_state);
  }
  return trajectory;
}

double chained_probability(const RunTrajectory& trajectory) {
  if (trajectory.scheme != Scheme::PB || !trajectory.is_pure())
    throw std::invalid_argument("chained_probability: defined for pure-state PB trajectories");
  double p = 1.0;
  for (const RoundRecord& r : trajectory.rounds) p *= r.probability;
  return p;
}

PureState recursion_pb(PbSeedFamily family, const PureState& seed, int rounds, double lambda,
                       std::span<const AuxQubit> aux, std::span<const int> outcomes) {
  if (rounds < 1) throw std::invalid_argument("recursion_pb: rounds must be >= 1");
  if (static_cast<int>(aux.size()) != rounds)
    throw std::invalid_argument("recursion_pb: one auxiliary parameter set per round required");

  auto m1 = m_coeffs(lambda, spanned_outcome(outcomes, 0, rounds));
  std::array<Vector, 4> comps = round1_structure(family, seed, aux[0]);
  for (int j = 0; j < 4; ++j) comps[j] *= m1[j];

  for (int round = 2; round <= rounds; ++round) {
    const AuxVectors v = aux_vectors(aux[round - 1]);
    const auto m = m_coeffs(lambda, spanned_outcome(outcomes, round - 1, rounds));
    std::array<Vector, 4> next;
    next[0] = m[0] * (kron(comps[0], v.chi_plus) + kron(comps[1], v.chi_minus) +
                      kron(comps[2], v.xi_plus) + kron(comps[3], v.xi_minus));
    next[1] = m[1] * (-kron(comps[0], v.chi_minus) - kron(comps[1], v.chi_plus) +
                      kron(comps[2], v.xi_minus) + kron(comps[3], v.xi_plus));
    next[2] = m[2] * (kron(comps[0], v.xi_plus) + kron(comps[1], v.xi_minus) +
                      kron(comps[2], v.chi_plus) + kron(comps[3], v.chi_minus));
    next[3] = m[3] * (-kron(comps[0], v.xi_minus) - kron(comps[1], v.xi_plus) +
                      kron(comps[2], v.chi_minus) + kron(comps[3], v.chi_plus));
    comps = std::move(next);
  }

  Vector assembled = Vector::Zero(comps[0].size() * 4);
  for (int j = 0; j < 4; ++j) {
    Vector bell = bell_vector(j + 1);
    assembled += kron(comps[j], bell);
  }
  assembled /= assembled.norm();
  return PureState(std::move(assembled));
}

PureState recursion_eb(EbSeedFamily family, const PureState& seed, int rounds, double lambda,
                       std::span<const int> outcomes) {
  if (rounds < 1) throw std::invalid_argument("recursion_eb: rounds must be >= 1");
  const Vector& s = seed.amplitudes();
  const bool nme_shaped = seed.num_parties() == 2 && std::abs(s(1)) < 1e-12 &&
                          std::abs(s(2)) < 1e-12 && std::abs(s(0).imag()) < 1e-12 &&
                          std::abs(s(3).imag()) < 1e-12;
  if (!nme_shaped)
    throw std::invalid_argument("recursion_eb: seed must be cos z |00> + sin z |11>");
  if (family == EbSeedFamily::MaxEntangled &&
      (seed.amplitudes() - phi_plus().amplitudes()).norm() > 1e-12)
    throw std::invalid_argument("recursion_eb: seed is not |phi+>");

  const double cz = s(0).real();
  const double sz = s(3).real();

  Vector p = Vector::Zero(2), q = Vector::Zero(2);
  p(0) = cz;  // cos z |0>
  q(1) = sz;  // sin z |1>

  for (int round = 1; round <= rounds; ++round) {
    const auto m = m_coeffs(lambda, spanned_outcome(outcomes, round - 1, rounds));
    const Vector e_plus = m[0] * bell_vector(1) + m[1] * bell_vector(2);
    const Vector e_minus = m[0] * bell_vector(1) - m[1] * bell_vector(2);
    const Vector f_plus = m[2] * bell_vector(3) + m[3] * bell_vector(4);
    const Vector f_minus = m[2] * bell_vector(3) - m[3] * bell_vector(4);
    Vector next_p = cz * (kron(p, f_plus) + kron(q, e_minus));
    Vector next_q = sz * (kron(p, e_plus) + kron(q, f_minus));
    p = std::move(next_p);
    q = std::move(next_q);
  }

  Vector zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  Vector assembled = kron(p, zero) + kron(q, one);
  assembled /= assembled.norm();
  return PureState(std::move(assembled));
}

}  // namespace qinflate
