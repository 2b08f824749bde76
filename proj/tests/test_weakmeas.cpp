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
#include "qinflate/entmeasures.hpp"
#include "qinflate/statefamilies.hpp"
#include "qinflate/weakmeas.hpp"

using namespace qinflate;

TEST_CASE("projective and trivial limits of the POVM") {
  const WeakPovm sharp(1.0);
  for (int k = 1; k <= 4; ++k) {
    const Eigen::Matrix4cd projector = bell_vector(k) * bell_vector(k).adjoint();
    CHECK((sharp.element(k) - projector).cwiseAbs().maxCoeff() < 1e-15);
  }
  const WeakPovm flat(0.0);
  for (int k = 1; k <= 4; ++k)
    CHECK((flat.element(k) - Eigen::Matrix4cd::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("POVM eigenvalues at lambda = 2/3") {
  const WeakPovm povm(2.0 / 3.0);
  for (int k = 1; k <= 4; ++k) {
    const auto eigs = hermitian_eigenvalues(Matrix(povm.element(k)));
    CHECK(eigs[0] == doctest::Approx(0.75).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(eigs[i] == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  }
}

TEST_CASE("POVM rejects sharpness outside the unit interval") {
  CHECK_THROWS_AS(WeakPovm(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(WeakPovm(1.1), std::invalid_argument);
}

TEST_CASE("POVM completeness and root consistency across the sharpness grid") {
  for (double lambda = 0.0; lambda <= 1.0 + 1e-12; lambda += 0.1) {
    const WeakPovm povm(lambda);
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int k = 1; k <= 4; ++k) {
      sum += povm.element(k);
      CHECK((povm.root(k) * povm.root(k) - povm.element(k)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(povm.fcoeff(k, k) ==
            doctest::Approx(std::sqrt((1 + 3 * lambda) / 4.0)).epsilon(1e-14));
      CHECK(povm.fcoeff(k, k == 1 ? 2 : 1) ==
            doctest::Approx(std::sqrt((1 - lambda) / 4.0)).epsilon(1e-14));
    }
    CHECK((sum - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("round-1 branch probabilities on the maximally entangled seed are flat") {
  std::mt19937_64 engine(21);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    const WeakPovm povm(unif(engine));
    const PureState grown =
        tensor(phi_plus(), aux_state({unif(engine) * 3.141, unif(engine) * 6.28}));
    for (int k = 1; k <= 4; ++k) {
      const auto out = apply_outcome(grown, {2, 3}, povm, k);
      CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
}

TEST_CASE("zero sharpness acts as the identity channel") {
  std::mt19937_64 engine(22);
  const PureState psi = oracles::random_pure(3, engine);
  const WeakPovm povm(0.0);
  for (int k = 1; k <= 4; ++k) {
    const auto out = apply_outcome(psi, {2, 3}, povm, k);
    REQUIRE(out.has_state());
    CHECK(oracles::overlap(*out.post_state, psi) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("vanishing branches come back flagged instead of dividing by zero") {
  // |0> x |psi-> is orthogonal to psi+ at full sharpness.
  Vector v = Vector::Zero(8);
  v(0b001) = 1.0 / std::sqrt(2.0);
  v(0b010) = -1.0 / std::sqrt(2.0);
  const PureState state{std::move(v)};
  const auto out = apply_outcome(state, {2, 3}, WeakPovm(1.0), 1);
  CHECK(!out.has_state());
  CHECK(out.probability < kZeroProbabilityTol);
}

TEST_CASE("outcome distributions are normalized for random registers") {
  std::mt19937_64 engine(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int parties = 3; parties <= 6; ++parties) {
    const WeakPovm povm(unif(engine));
    const std::pair<int, int> pair{parties - 1, parties};
    const auto pure_probs = outcome_distribution(oracles::random_pure(parties, engine), pair, povm);
    CHECK(pure_probs[0] + pure_probs[1] + pure_probs[2] + pure_probs[3] ==
          doctest::Approx(1.0).epsilon(1e-12));
    if (parties <= 5) {
      const auto mixed_probs =
          outcome_distribution(oracles::random_mixed(parties, engine), pair, povm);
      CHECK(mixed_probs[0] + mixed_probs[1] + mixed_probs[2] + mixed_probs[3] ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("distribution agrees with per-outcome application") {
  std::mt19937_64 engine(24);
  const PureState psi = oracles::random_pure(4, engine);
  const WeakPovm povm(0.55);
  const auto probs = outcome_distribution(psi, {2, 4}, povm);
  for (int k = 1; k <= 4; ++k)
    CHECK(probs[k - 1] ==
          doctest::Approx(apply_outcome(psi, {2, 4}, povm, k).probability).epsilon(1e-12));
}

TEST_CASE("mixed-state update matches the lifted pure-state update") {
  std::mt19937_64 engine(25);
  const PureState psi = oracles::random_pure(3, engine);
  const WeakPovm povm(0.7);
  const auto pure_out = apply_outcome(psi, {1, 3}, povm, 2);
  const auto mixed_out = apply_outcome(to_mixed(psi), {1, 3}, povm, 2);
  REQUIRE(pure_out.has_state());
  REQUIRE(mixed_out.has_state());
  CHECK(pure_out.probability == doctest::Approx(mixed_out.probability).epsilon(1e-12));
  const Matrix lifted = to_mixed(*pure_out.post_state).matrix();
  CHECK((lifted - mixed_out.post_state->matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("GGM of every round-1 branch coincides on the symmetric seed") {
  const WeakPovm povm(0.43);
  const PureState grown = tensor(phi_plus(), aux_state({1.1, 2.3}));
  double first = -1.0;
  for (int k = 1; k <= 4; ++k) {
    const auto out = apply_outcome(grown, {2, 3}, povm, k);
    REQUIRE(out.has_state());
    const double g = ggm(*out.post_state, CutPolicy::All).value;
    if (first < 0)
      first = g;
    else
      CHECK(g == doctest::Approx(first).epsilon(1e-10));
  }
}

TEST_CASE("measurement pair validation") {
  const PureState psi = tensor(phi_plus(), phi_plus());
  const WeakPovm povm(0.5);
  CHECK_THROWS_AS(apply_outcome(psi, {2, 2}, povm, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_outcome(psi, {0, 1}, povm, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_outcome(psi, {4, 5}, povm, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_outcome(psi, {1, 2}, povm, 5), std::invalid_argument);
}
