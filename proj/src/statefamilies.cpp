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

#include "qinflate/statefamilies.hpp"

#include <cmath>

#include "qinflate/entmeasures.hpp"

namespace qinflate {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vector gaussian_amplitudes(Eigen::Index dim, Rng& rng) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 applied to master + index * odd constant.
  std::uint64_t z = master + index * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

PureState aux_state(const AuxQubit& aux) {
  Vector v(2);
  v(0) = std::cos(aux.theta / 2.0);
  v(1) = std::polar(std::sin(aux.theta / 2.0), aux.phi);
  return PureState(std::move(v));
}

PureState nme(double z) {
  if (!(z >= 0.0 && z <= kPi / 4.0 + 1e-12))
    throw std::invalid_argument("nme: z must lie in [0, pi/4]");
  Vector v = Vector::Zero(4);
  v(0) = std::cos(z);
  v(3) = std::sin(z);
  return PureState(std::move(v));
}

PureState phi_plus() { return nme(kPi / 4.0); }

PureState ghz() { return gghz(kPi / 4.0); }

PureState w_state() {
  Vector v = Vector::Zero(8);
  const double a = 1.0 / std::sqrt(3.0);
  v(0b001) = a;
  v(0b010) = a;
  v(0b100) = a;
  return PureState(std::move(v));
}

PureState gghz(double z) {
  if (!(z >= 0.0 && z <= kPi / 4.0 + 1e-12))
    throw std::invalid_argument("gghz: z must lie in [0, pi/4]");
  Vector v = Vector::Zero(8);
  v(0) = std::cos(z);
  v(7) = std::sin(z);
  return PureState(std::move(v));
}

PureState haar_pure(int n_qubits, Rng& rng) {
  if (n_qubits != 2 && n_qubits != 3)
    throw std::invalid_argument("haar_pure: only 2- and 3-qubit samples are supported");
  return PureState(gaussian_amplitudes(Eigen::Index(1) << n_qubits, rng));
}

PureState ghz_class_random(Rng& rng) {
  while (true) {
    PureState sample(gaussian_amplitudes(8, rng));
    if (tangle(sample) > kTangleFloor) return sample;
  }
}

PureState w_class_random(Rng& rng) {
  Vector coeffs = gaussian_amplitudes(4, rng);
  Vector v = Vector::Zero(8);
  v(0b000) = coeffs(0);
  v(0b010) = coeffs(1);
  v(0b001) = coeffs(2);
  v(0b100) = coeffs(3);
  return PureState(std::move(v));
}

MixedState werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("werner: p must lie in [0,1]");
  const PureState bell = phi_plus();
  Matrix m = p * (bell.amplitudes() * bell.amplitudes().adjoint());
  m += (1.0 - p) / 4.0 * Matrix::Identity(4, 4);
  m = (m + m.adjoint().eval()) / 2.0;
  return MixedState::trusted(std::move(m));
}

}  // namespace qinflate
