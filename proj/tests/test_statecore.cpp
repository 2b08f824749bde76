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

#include <doctest.h>

#include "oracles.hpp"
#include "qinflate/statecore.hpp"
#include "qinflate/statefamilies.hpp"

using namespace qinflate;

namespace {
PureState basis_state(int parties, int index) {
  Vector v = Vector::Zero(Eigen::Index(1) << parties);
  v(index) = 1.0;
  return PureState(std::move(v));
}
}  // namespace

TEST_CASE("tensor of computational basis states") {
  const PureState s = tensor(basis_state(1, 0), basis_state(1, 0));
  CHECK(s.num_parties() == 2);
  CHECK(s.amplitude(0) == Complex(1.0));
  CHECK(s.amplitudes().tail(3).norm() == 0.0);
}

TEST_CASE("tensor dimension and party bookkeeping") {
  const PureState s = tensor(phi_plus(), basis_state(1, 1));
  CHECK(s.dim() == 8);
  CHECK(s.num_parties() == 3);
  // left operand stays most significant: |phi+>|1> has support on 001, 111
  CHECK(std::abs(s.amplitude(0b001)) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(s.amplitude(0b111)) == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("tensor matches the index-by-index Kronecker oracle") {
  std::mt19937_64 engine(11);
  const PureState a = oracles::random_pure(2, engine);
  const PureState b = oracles::random_pure(3, engine);
  const PureState t = tensor(a, b);
  const Vector expected = oracles::kron_oracle(a.amplitudes(), b.amplitudes());
  CHECK((t.amplitudes() - expected).norm() < 1e-14);
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  const MixedState rho = to_mixed(phi_plus());
  const MixedState reduced = partial_trace(rho, {1});
  CHECK((reduced.matrix() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-14);
}

TEST_CASE("partial trace of a product state picks the kept factor") {
  const MixedState rho = to_mixed(tensor(basis_state(1, 0), basis_state(1, 1)));
  const MixedState reduced = partial_trace(rho, {1});
  CHECK(std::abs(reduced.matrix()(0, 0).real() - 1.0) < 1e-14);
}

TEST_CASE("partial trace of the Werner state is maximally mixed") {
  for (double p : {0.0, 0.3, 2.0 / 3.0, 1.0}) {
    const MixedState reduced = partial_trace(werner(p), {1});
    CHECK((reduced.matrix() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-13);
  }
}

TEST_CASE("partial trace undoes tensor") {
  std::mt19937_64 engine(12);
  const MixedState a = oracles::random_mixed(2, engine);
  const MixedState b = oracles::random_mixed(1, engine);
  const MixedState back = partial_trace(tensor(a, b), {1, 2});
  CHECK((back.matrix() - a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace rejects empty and full keep sets") {
  const MixedState rho = to_mixed(phi_plus());
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {3}), std::invalid_argument);
}

TEST_CASE("partial transpose of a product state keeps its spectrum") {
  std::mt19937_64 engine(13);
  const MixedState a = oracles::random_mixed(1, engine);
  const MixedState b = oracles::random_mixed(1, engine);
  const MixedState prod = tensor(a, b);
  const auto before = hermitian_eigenvalues(prod.matrix());
  const auto after = hermitian_eigenvalues(partial_transpose(prod, {2}));
  for (std::size_t i = 0; i < before.size(); ++i)
    CHECK(before[i] == doctest::Approx(after[i]).epsilon(1e-12));
}

TEST_CASE("partial transpose of the Bell projector has the frozen spectrum") {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(to_mixed(phi_plus()), {2}));
  const double expected[4] = {0.5, 0.5, 0.5, -0.5};
  for (int i = 0; i < 4; ++i) CHECK(spectrum[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("partial transpose is an involution and preserves trace and Hermiticity") {
  std::mt19937_64 engine(14);
  const MixedState rho = oracles::random_mixed(3, engine);
  const Matrix pt = partial_transpose(rho, {2});
  CHECK((pt - pt.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(pt.trace().real() - 1.0) < 1e-14);
  const Matrix twice = partial_transpose(MixedState::trusted(pt), {2});
  CHECK((twice - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("max Schmidt coefficient of standard states") {
  CHECK(max_schmidt_sq(phi_plus(), Bipartition({1}, 2)) == doctest::Approx(0.5).epsilon(1e-12));
  const PureState product = tensor(basis_state(1, 0), basis_state(1, 1));
  CHECK(max_schmidt_sq(product, Bipartition({1}, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  for (double z : {0.1, 0.4, 0.7853981633974483}) {
    CHECK(max_schmidt_sq(nme(z), Bipartition({1}, 2)) ==
          doctest::Approx(std::cos(z) * std::cos(z)).epsilon(1e-12));
  }
}

TEST_CASE("Schmidt spectra agree on both sides of a cut") {
  std::mt19937_64 engine(15);
  for (int parties : {3, 4, 5}) {
    const PureState psi = oracles::random_pure(parties, engine);
    const Bipartition cut({1, parties >= 4 ? 3 : 2}, parties);
    const auto ea = hermitian_eigenvalues(reduced_density(psi, cut.side_a()).matrix());
    const auto eb = hermitian_eigenvalues(reduced_density(psi, cut.side_b()).matrix());
    double sum = 0.0;
    for (double e : ea) sum += e;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i)
      CHECK(ea[i] == doctest::Approx(eb[i]).epsilon(1e-10));
  }
}

TEST_CASE("max Schmidt coefficient stays in its allowed band") {
  std::mt19937_64 engine(16);
  for (int rep = 0; rep < 20; ++rep) {
    const PureState psi = oracles::random_pure(4, engine);
    const Bipartition cut(rep % 2 ? std::vector<int>{2} : std::vector<int>{1, 4}, 4);
    const double e = max_schmidt_sq(psi, cut);
    const int smaller = std::min(cut.side_a().size(), cut.side_b().size());
    CHECK(e <= 1.0 + 1e-12);
    CHECK(e >= 1.0 / (1 << smaller) - 1e-12);
  }
}

TEST_CASE("hermitian_eigenvalues on diagonal input") {
  Matrix half = Matrix::Identity(2, 2) / 2.0;
  const auto flat = hermitian_eigenvalues(half);
  CHECK(flat[0] == doctest::Approx(0.5));
  CHECK(flat[1] == doctest::Approx(0.5));
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  const auto two = hermitian_eigenvalues(diag);
  CHECK(two[0] == doctest::Approx(0.7));
  CHECK(two[1] == doctest::Approx(0.3));
}

TEST_CASE("hermitian_eigenvalues matches characteristic-polynomial roots at 4x4") {
  std::mt19937_64 engine(17);
  const MixedState rho = oracles::random_mixed(2, engine, 4);
  const auto eigs = hermitian_eigenvalues(rho.matrix());
  const auto roots = oracles::quartic_real_roots(oracles::char_poly_4(rho.matrix()));
  for (int i = 0; i < 4; ++i) CHECK(eigs[i] == doctest::Approx(roots[i]).epsilon(1e-9));
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("state constructors enforce their invariants") {
  Vector bad(3);
  bad << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(PureState(bad), std::invalid_argument);
  Vector unnormalized(2);
  unnormalized << 1.0, 1.0;
  CHECK_THROWS_AS(PureState(unnormalized), std::invalid_argument);

  Matrix not_herm = Matrix::Zero(2, 2);
  not_herm(0, 1) = 0.3;
  not_herm(0, 0) = 1.0;
  CHECK_THROWS_AS(MixedState(not_herm), std::invalid_argument);
  Matrix wrong_trace = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(MixedState(wrong_trace), std::invalid_argument);
  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(MixedState(indefinite), std::invalid_argument);
}

TEST_CASE("bipartition complement bookkeeping") {
  const Bipartition cut({2, 4}, 5);
  const auto b = cut.side_b();
  CHECK(b == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(Bipartition({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({1, 2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({1, 1}, 3), std::invalid_argument);
}
