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

// Test-only reference implementations, independent of the library's code
// paths: an index-by-index Kronecker product, characteristic-polynomial
// eigenvalues for 4x4 Hermitian matrices (Faddeev-LeVerrier coefficients plus
// Durand-Kerner roots), and random-state helpers.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "qinflate/statecore.hpp"

namespace oracles {

using qinflate::Complex;
using qinflate::Matrix;
using qinflate::Vector;

inline Vector kron_oracle(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
  return out;
}

// Monic characteristic polynomial coefficients of a 4x4 matrix:
// l^4 + c[0] l^3 + c[1] l^2 + c[2] l + c[3].
inline std::array<Complex, 4> char_poly_4(const Matrix& a) {
  std::array<Complex, 4> c;
  Matrix m = a;
  c[0] = -m.trace();
  for (int k = 2; k <= 4; ++k) {
    m = a * (m + c[k - 2] * Matrix::Identity(4, 4));
    c[k - 1] = -m.trace() / static_cast<double>(k);
  }
  return c;
}

// Durand-Kerner iteration for the quartic roots.
inline std::vector<double> quartic_real_roots(const std::array<Complex, 4>& c) {
  auto p = [&](Complex x) { return (((x + c[0]) * x + c[1]) * x + c[2]) * x + c[3]; };
  std::array<Complex, 4> r;
  const Complex seed(0.4, 0.9);
  r[0] = 1.0;
  for (int i = 1; i < 4; ++i) r[i] = r[i - 1] * seed;
  for (int iter = 0; iter < 200; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= r[i] - r[j];
      const Complex step = p(r[i]) / denom;
      r[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  std::vector<double> roots;
  for (const Complex& x : r) roots.push_back(x.real());
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

inline qinflate::PureState random_pure(int parties, std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(Eigen::Index(1) << parties);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(engine), normal(engine));
  v /= v.norm();
  return qinflate::PureState(std::move(v));
}

inline qinflate::MixedState random_mixed(int parties, std::mt19937_64& engine, int rank = 3) {
  const Eigen::Index d = Eigen::Index(1) << parties;
  Matrix m = Matrix::Zero(d, d);
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  for (int t = 0; t < rank; ++t) {
    const auto psi = random_pure(parties, engine);
    m += unif(engine) * (psi.amplitudes() * psi.amplitudes().adjoint());
  }
  m /= m.trace().real();
  m = ((m + m.adjoint().eval()) / 2.0).eval();
  return qinflate::MixedState(std::move(m));
}

// Haar single-qubit unitary from three angles.
inline Eigen::Matrix2cd random_unitary_2(std::mt19937_64& engine) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(engine) * 3.14159265358979323846 / 2.0;
  const double v = unif(engine) * 2.0 * 3.14159265358979323846;
  const double w = unif(engine) * 2.0 * 3.14159265358979323846;
  Eigen::Matrix2cd m;
  m << std::polar(std::cos(u), v), std::polar(std::sin(u), w),
      -std::polar(std::sin(u), -w), std::polar(std::cos(u), -v);
  return m;
}

inline qinflate::PureState apply_local_unitary(const qinflate::PureState& state, int party,
                                               const Eigen::Matrix2cd& u) {
  const int n = state.num_parties();
  const Eigen::Index bit = Eigen::Index(1) << qinflate::bit_position(n, party);
  Vector out(state.dim());
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const Eigen::Index base = i & ~bit;
    const int b = (i & bit) ? 1 : 0;
    out(i) = u(b, 0) * state.amplitude(base) + u(b, 1) * state.amplitude(base | bit);
  }
  return qinflate::PureState(std::move(out));
}

inline double binary_entropy(double x) {
  double h = 0.0;
  for (double v : {x, 1.0 - x})
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

inline double overlap(const qinflate::PureState& a, const qinflate::PureState& b) {
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace oracles
