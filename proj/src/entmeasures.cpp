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

#include "qinflate/entmeasures.hpp"

#include <algorithm>
#include <cmath>

namespace qinflate {

namespace {

// One representative of every non-trivial bipartition: subsets of size
// 1..N/2, and for even N only half the size-N/2 subsets (those containing
// party 1).
std::vector<std::vector<int>> all_cut_sides(int n) {
  std::vector<std::vector<int>> sides;
  for (int size = 1; 2 * size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    while (true) {
      if (!(2 * size == n && idx[0] != 1)) sides.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return sides;
}

std::vector<std::vector<int>> reduced_cut_sides(int n) {
  std::vector<std::vector<int>> sides;
  for (int p = 1; p <= n; ++p) sides.push_back({p});
  if (n >= 3)
    for (int p = 1; p < n; ++p) sides.push_back({p, p + 1});
  return sides;
}

// sigma_y (x) sigma_y in the computational basis.
Eigen::Matrix4cd spin_flip_matrix() {
  Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

CutPolicy default_cut_policy(int num_parties) {
  return num_parties <= 7 ? CutPolicy::All : CutPolicy::Reduced;
}

GgmReport ggm(const PureState& state, CutPolicy policy) {
  const int n = state.num_parties();
  if (n < 2) throw std::invalid_argument("ggm: at least two parties required");
  const auto sides = policy == CutPolicy::All ? all_cut_sides(n) : reduced_cut_sides(n);
  double best = -1.0;
  const std::vector<int>* best_side = nullptr;
  for (const auto& side : sides) {
    const Bipartition cut(side, n);
    const double e = max_schmidt_sq(state, cut);
    if (e > best) {
      best = e;
      best_side = &side;
    }
  }
  return GgmReport{1.0 - best, Bipartition(*best_side, n), best};
}

GgmReport ggm(const PureState& state) {
  return ggm(state, default_cut_policy(state.num_parties()));
}

double concurrence(const MixedState& state) {
  if (state.num_parties() != 2)
    throw std::invalid_argument("concurrence: defined for exactly two qubits");
  static const Eigen::Matrix4cd y = spin_flip_matrix();
  // With W holding the subnormalized eigenvectors of rho, the mu_i of the
  // spin-flip construction are the singular values of the symmetric bilinear
  // tau = W^T (sigma_y x sigma_y) W.  tau is quadratic in sqrt(eigenvalue),
  // so exact zero modes of rho stay at machine-epsilon scale instead of
  // picking up sqrt-amplified noise.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(state.matrix());
  Eigen::Matrix4cd w = es.eigenvectors();
  // Relative cutoff: numerically-zero modes of rank-deficient inputs must
  // enter as exact zeros, or their sqrt leaks ~1e-9 into the cross terms.
  const double floor = 1e-12 * std::max(0.0, es.eigenvalues().maxCoeff());
  for (int i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues()(i);
    w.col(i) *= lam > floor ? std::sqrt(lam) : 0.0;
  }
  const Eigen::Matrix4cd tau = w.transpose() * y * w;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  const auto& mu = svd.singularValues();
  return std::max(0.0, mu(0) - mu(1) - mu(2) - mu(3));
}

double tangle(const PureState& state) {
  if (state.num_parties() != 3)
    throw std::invalid_argument("tangle: defined for pure three-qubit states");
  const Matrix rho1 = reduced_density(state, {1}).matrix();
  const double one_vs_rest = 4.0 * (rho1(0, 0) * rho1(1, 1) - rho1(0, 1) * rho1(1, 0)).real();
  const double c12 = concurrence(reduced_density(state, {1, 2}));
  const double c13 = concurrence(reduced_density(state, {1, 3}));
  return one_vs_rest - c12 * c12 - c13 * c13;
}

double negativity(const MixedState& state, const Bipartition& cut) {
  if (cut.num_parties() != state.num_parties())
    throw std::invalid_argument("negativity: bipartition does not match the state");
  const Matrix pt = partial_transpose(state, cut.side_a());
  double sum = 0.0;
  for (double e : hermitian_eigenvalues(pt))
    if (e < 0.0) sum -= e;
  return sum;
}

double log_negativity(const MixedState& state, const Bipartition& cut) {
  return std::log2(2.0 * negativity(state, cut) + 1.0);
}

MonogamyReport monogamy_score_negativity(const MixedState& state, int focus) {
  const int n = state.num_parties();
  if (n < 3) throw std::invalid_argument("monogamy_score_negativity: at least three parties required");
  if (focus < 1 || focus > n)
    throw std::invalid_argument("monogamy_score_negativity: focus party out of range");
  MonogamyReport report;
  report.focus_party = focus;
  report.focus_vs_rest = negativity(state, Bipartition({focus}, n));
  report.value = report.focus_vs_rest;
  for (int p = 1; p <= n; ++p) {
    if (p == focus) continue;
    const std::vector<int> keep = focus < p ? std::vector<int>{focus, p} : std::vector<int>{p, focus};
    const MixedState marginal = partial_trace(state, keep);
    const double pairwise = negativity(marginal, Bipartition({1}, 2));
    report.pairwise.push_back(pairwise);
    report.value -= pairwise;
  }
  return report;
}

double entanglement_entropy(const PureState& state) {
  if (state.num_parties() != 2)
    throw std::invalid_argument("entanglement_entropy: defined for two-qubit pure states");
  const double e = max_schmidt_sq(state, Bipartition({1}, 2));
  double h = 0.0;
  for (double v : {e, 1.0 - e})
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace qinflate
