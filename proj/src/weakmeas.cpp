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

#include "qinflate/weakmeas.hpp"

#include <cmath>

namespace qinflate {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Eigen::Matrix4cd make_bell_basis() {
  Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
  b(1, 0) = kInvSqrt2; b(2, 0) = kInvSqrt2;    // psi+
  b(1, 1) = kInvSqrt2; b(2, 1) = -kInvSqrt2;   // psi-
  b(0, 2) = kInvSqrt2; b(3, 2) = kInvSqrt2;    // phi+
  b(0, 3) = kInvSqrt2; b(3, 3) = -kInvSqrt2;   // phi-
  return b;
}

// Bell-diagonal operator sum_i w[i] |Bell_i><Bell_i|.
Eigen::Matrix4cd bell_diagonal(const std::array<double, 4>& w) {
  const Eigen::Matrix4cd& b = bell_basis();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) out += w[i] * (b.col(i) * b.col(i).adjoint());
  return out;
}

// Gather/scatter application of a 4x4 kernel to the (first, second) qubit
// pair of a register vector.  The kernel row/column index is 2*b_first +
// b_second.
void apply_kernel(const Eigen::Matrix4cd& g, int num_parties, std::pair<int, int> pair,
                  const Vector& in, Vector& out) {
  const std::uint64_t pf = std::uint64_t{1} << bit_position(num_parties, pair.first);
  const std::uint64_t ps = std::uint64_t{1} << bit_position(num_parties, pair.second);
  const std::uint64_t dim = std::uint64_t{1} << num_parties;
  const std::uint64_t pairmask = pf | ps;
  out.resize(in.size());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & pairmask) continue;
    const std::uint64_t idx[4] = {base, base | ps, base | pf, base | pf | ps};
    Eigen::Vector4cd v;
    for (int c = 0; c < 4; ++c) v(c) = in(idx[c]);
    const Eigen::Vector4cd w = g * v;
    for (int r = 0; r < 4; ++r) out(idx[r]) = w(r);
  }
}

void check_pair(int num_parties, std::pair<int, int> pair) {
  if (pair.first == pair.second)
    throw std::invalid_argument("apply_outcome: measured parties must be distinct");
  for (int p : {pair.first, pair.second})
    if (p < 1 || p > num_parties)
      throw std::invalid_argument("apply_outcome: party index out of range");
}

}  // namespace

const Eigen::Matrix4cd& bell_basis() {
  static const Eigen::Matrix4cd basis = make_bell_basis();
  return basis;
}

Eigen::Vector4cd bell_vector(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("bell_vector: k must be in 1..4");
  return bell_basis().col(k - 1);
}

int WeakPovm::check(int k) {
  if (k < 1 || k > kNumOutcomes) throw std::invalid_argument("WeakPovm: outcome index must be in 1..4");
  return k - 1;
}

WeakPovm::WeakPovm(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("WeakPovm: lambda must lie in [0,1]");
  const double sharp = (1.0 + 3.0 * lambda) / 4.0;
  const double flat = (1.0 - lambda) / 4.0;
  for (int k = 0; k < 4; ++k) {
    std::array<double, 4> eigs;
    std::array<double, 4> froots;
    for (int i = 0; i < 4; ++i) {
      eigs[i] = (i == k) ? sharp : flat;
      froots[i] = std::sqrt(eigs[i]);
      fcoeffs_[k][i] = froots[i];
    }
    elements_[k] = bell_diagonal(eigs);
    roots_[k] = bell_diagonal(froots);
  }
}

WeakPovm build_povm(double lambda) { return WeakPovm(lambda); }

MeasurementOutcome<PureState> apply_outcome(const PureState& state, std::pair<int, int> pair,
                                            const WeakPovm& povm, int k) {
  check_pair(state.num_parties(), pair);
  Vector updated;
  apply_kernel(povm.root(k), state.num_parties(), pair, state.amplitudes(), updated);
  const double p = updated.squaredNorm();
  MeasurementOutcome<PureState> out{k, p, std::nullopt};
  if (p >= kZeroProbabilityTol) {
    updated /= std::sqrt(p);
    out.post_state.emplace(std::move(updated));
  }
  return out;
}

MeasurementOutcome<MixedState> apply_outcome(const MixedState& state, std::pair<int, int> pair,
                                             const WeakPovm& povm, int k) {
  check_pair(state.num_parties(), pair);
  const int n = state.num_parties();
  const Eigen::Index d = state.dim();
  // K rho K^dag, built column-wise: A = K rho, result = K A^dag (rho Hermitian).
  Matrix a(d, d);
  Vector col;
  for (Eigen::Index c = 0; c < d; ++c) {
    apply_kernel(povm.root(k), n, pair, state.matrix().col(c), col);
    a.col(c) = col;
  }
  Matrix ad = a.adjoint();
  Matrix updated(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    apply_kernel(povm.root(k), n, pair, ad.col(c), col);
    updated.col(c) = col;
  }
  const double p = updated.trace().real();
  MeasurementOutcome<MixedState> out{k, p, std::nullopt};
  if (p >= kZeroProbabilityTol) {
    updated /= p;
    updated = (updated + updated.adjoint().eval()) / 2.0;
    out.post_state.emplace(MixedState::trusted(std::move(updated)));
  }
  return out;
}

std::array<double, 4> outcome_distribution(const PureState& state, std::pair<int, int> pair,
                                           const WeakPovm& povm) {
  check_pair(state.num_parties(), pair);
  const int n = state.num_parties();
  const std::uint64_t pf = std::uint64_t{1} << bit_position(n, pair.first);
  const std::uint64_t ps = std::uint64_t{1} << bit_position(n, pair.second);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::array<double, 4> probs{};
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (pf | ps)) continue;
    const std::uint64_t idx[4] = {base, base | ps, base | pf, base | pf | ps};
    Eigen::Vector4cd v;
    for (int c = 0; c < 4; ++c) v(c) = state.amplitude(idx[c]);
    for (int k = 1; k <= 4; ++k)
      probs[k - 1] += (v.adjoint() * povm.element(k) * v)(0).real();
  }
  return probs;
}

std::array<double, 4> outcome_distribution(const MixedState& state, std::pair<int, int> pair,
                                           const WeakPovm& povm) {
  check_pair(state.num_parties(), pair);
  const int n = state.num_parties();
  const std::uint64_t pf = std::uint64_t{1} << bit_position(n, pair.first);
  const std::uint64_t ps = std::uint64_t{1} << bit_position(n, pair.second);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::array<double, 4> probs{};
  // Tr(E rho) with E = M_k embedded on the pair: only index pairs sharing the
  // untouched bits contribute.
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (pf | ps)) continue;
    const std::uint64_t idx[4] = {base, base | ps, base | pf, base | pf | ps};
    for (int k = 1; k <= 4; ++k) {
      const Eigen::Matrix4cd& m = povm.element(k);
      Complex sum = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sum += m(r, c) * state.matrix()(idx[c], idx[r]);
      probs[k - 1] += sum.real();
    }
  }
  return probs;
}

}  // namespace qinflate
