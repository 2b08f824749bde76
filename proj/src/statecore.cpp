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

#include "qinflate/statecore.hpp"

#include <algorithm>
#include <cmath>

namespace qinflate {

namespace {

int parties_from_dim(Eigen::Index dim, const char* what) {
  if (dim < 2) throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument(std::string(what) + ": dimension is not a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

void check_party_subset(const std::vector<int>& subset, int num_parties, const char* what) {
  if (subset.empty()) throw std::invalid_argument(std::string(what) + ": empty party subset");
  if (static_cast<int>(subset.size()) >= num_parties)
    throw std::invalid_argument(std::string(what) + ": subset must be a proper subset of the parties");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > num_parties)
      throw std::invalid_argument(std::string(what) + ": party index out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument(std::string(what) + ": duplicate party index");
  }
}

// Assemble a full register index from a compact index over `parties`
// (sorted ascending, MSB-first like the register itself).
inline std::uint64_t expand_index(std::uint64_t compact, const std::vector<int>& parties,
                                  int num_parties) {
  std::uint64_t full = 0;
  const int k = static_cast<int>(parties.size());
  for (int j = 0; j < k; ++j) {
    const std::uint64_t bit = (compact >> (k - 1 - j)) & 1u;
    full |= bit << bit_position(num_parties, parties[j]);
  }
  return full;
}

double max_abs_asymmetry(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  num_parties_ = parties_from_dim(amplitudes_.size(), "PureState");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw std::invalid_argument("PureState: amplitudes not normalized");
}

MixedState::MixedState(Matrix density) : MixedState(std::move(density), Trusted{}) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdSlack)
    throw std::invalid_argument("MixedState: matrix not positive semidefinite");
}

MixedState::MixedState(Matrix density, Trusted) : matrix_(std::move(density)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("MixedState: matrix must be square");
  num_parties_ = parties_from_dim(matrix_.rows(), "MixedState");
  if (max_abs_asymmetry(matrix_) > kHermTol)
    throw std::invalid_argument("MixedState: matrix not Hermitian");
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kNormTol)
    throw std::invalid_argument("MixedState: trace must be 1");
}

MixedState MixedState::trusted(Matrix density) {
  return MixedState(std::move(density), Trusted{});
}

Bipartition::Bipartition(std::vector<int> side_a, int num_parties)
    : side_a_(std::move(side_a)), num_parties_(num_parties) {
  check_party_subset(side_a_, num_parties_, "Bipartition");
  std::sort(side_a_.begin(), side_a_.end());
}

std::vector<int> Bipartition::side_b() const {
  std::vector<int> b;
  b.reserve(num_parties_ - side_a_.size());
  std::size_t j = 0;
  for (int p = 1; p <= num_parties_; ++p) {
    if (j < side_a_.size() && side_a_[j] == p) {
      ++j;
    } else {
      b.push_back(p);
    }
  }
  return b;
}

PureState tensor(const PureState& left, const PureState& right) {
  Vector out(left.dim() * right.dim());
  for (Eigen::Index i = 0; i < left.dim(); ++i)
    out.segment(i * right.dim(), right.dim()) = left.amplitude(i) * right.amplitudes();
  return PureState(std::move(out));
}

MixedState tensor(const MixedState& left, const MixedState& right) {
  const Eigen::Index dl = left.dim(), dr = right.dim();
  Matrix out(dl * dr, dl * dr);
  for (Eigen::Index i = 0; i < dl; ++i)
    for (Eigen::Index j = 0; j < dl; ++j)
      out.block(i * dr, j * dr, dr, dr) = left.matrix()(i, j) * right.matrix();
  return MixedState::trusted(std::move(out));
}

MixedState to_mixed(const PureState& state) {
  Matrix m = state.amplitudes() * state.amplitudes().adjoint();
  m = (m + m.adjoint().eval()) / 2.0;
  return MixedState::trusted(std::move(m));
}

MixedState partial_trace(const MixedState& state, const std::vector<int>& keep) {
  const int n = state.num_parties();
  check_party_subset(keep, n, "partial_trace");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int p = 1; p <= n; ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  const Eigen::Index dk = Eigen::Index(1) << kept.size();
  const Eigen::Index dt = Eigen::Index(1) << traced.size();
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    const std::uint64_t ra = expand_index(a, kept, n);
    for (Eigen::Index b = 0; b < dk; ++b) {
      const std::uint64_t rb = expand_index(b, kept, n);
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        const std::uint64_t rt = expand_index(t, traced, n);
        sum += state.matrix()(ra | rt, rb | rt);
      }
      out(a, b) = sum;
    }
  }
  // Symmetrize away representation round-off before revalidating.
  out = (out + out.adjoint().eval()) / 2.0;
  return MixedState::trusted(std::move(out));
}

MixedState reduced_density(const PureState& state, const std::vector<int>& keep) {
  const int n = state.num_parties();
  check_party_subset(keep, n, "reduced_density");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int p = 1; p <= n; ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  const Eigen::Index dk = Eigen::Index(1) << kept.size();
  const Eigen::Index dt = Eigen::Index(1) << traced.size();
  // rho[a,b] = sum_t psi[a,t] conj(psi[b,t]) over the traced configurations.
  Matrix slices(dt, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    const std::uint64_t ra = expand_index(a, kept, n);
    for (Eigen::Index t = 0; t < dt; ++t)
      slices(t, a) = std::conj(state.amplitude(ra | expand_index(t, traced, n)));
  }
  Matrix out = slices.adjoint() * slices;
  out = (out + out.adjoint().eval()) / 2.0;
  return MixedState::trusted(std::move(out));
}

Matrix partial_transpose(const MixedState& state, const std::vector<int>& over) {
  const int n = state.num_parties();
  check_party_subset(over, n, "partial_transpose");
  std::uint64_t mask = 0;
  for (int p : over) mask |= std::uint64_t{1} << bit_position(n, p);

  const Eigen::Index d = state.dim();
  Matrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const std::uint64_t rr = (std::uint64_t(r) & ~mask) | (std::uint64_t(c) & mask);
      const std::uint64_t cc = (std::uint64_t(c) & ~mask) | (std::uint64_t(r) & mask);
      out(r, c) = state.matrix()(rr, cc);
    }
  }
  return out;
}

double max_schmidt_sq(const PureState& state, const Bipartition& cut) {
  if (cut.num_parties() != state.num_parties())
    throw std::invalid_argument("max_schmidt_sq: bipartition does not match the state");
  std::vector<int> side = cut.side_a();
  if (side.size() * 2 > static_cast<std::size_t>(state.num_parties())) side = cut.side_b();
  const MixedState rho = reduced_density(state, side);
  if (rho.dim() == 2) {
    // Closed form for a 2x2 Hermitian spectrum; this is the hot path of GGM.
    const double a = rho.matrix()(0, 0).real();
    const double d = rho.matrix()(1, 1).real();
    const double off = std::abs(rho.matrix()(0, 1));
    return (a + d) / 2.0 + std::sqrt((a - d) * (a - d) / 4.0 + off * off);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if (max_abs_asymmetry(m) > 1e-10)
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::reverse(vals.begin(), vals.end());
  return vals;
}

}  // namespace qinflate
