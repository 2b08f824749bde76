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

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("GGM of the standard tripartite states") {
  CHECK(ggm(ghz()).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ggm(w_state()).value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("GGM report is self-consistent") {
  const GgmReport report = ggm(w_state());
  CHECK(report.value == doctest::Approx(1.0 - report.argmax_eigenvalue).epsilon(1e-14));
  CHECK(report.argmax_cut.num_parties() == 3);
}

TEST_CASE("two-party GGM degenerates to one minus the top Schmidt weight") {
  const PureState seed = nme(0.5);
  CHECK(ggm(seed).value ==
        doctest::Approx(1.0 - std::cos(0.5) * std::cos(0.5)).epsilon(1e-12));
  Vector v = Vector::Zero(2);
  v(0) = 1.0;
  CHECK_THROWS_AS(ggm(PureState(std::move(v))), std::invalid_argument);
}

TEST_CASE("all-cut and reduced policies agree on three parties") {
  std::mt19937_64 engine(31);
  for (int rep = 0; rep < 5; ++rep) {
    const PureState psi = oracles::random_pure(3, engine);
    CHECK(ggm(psi, CutPolicy::All).value ==
          doctest::Approx(ggm(psi, CutPolicy::Reduced).value).epsilon(1e-14));
  }
}

TEST_CASE("GGM is invariant under local unitaries") {
  std::mt19937_64 engine(32);
  for (int rep = 0; rep < 5; ++rep) {
    PureState psi = oracles::random_pure(4, engine);
    const double before = ggm(psi, CutPolicy::All).value;
    for (int party = 1; party <= 4; ++party)
      psi = oracles::apply_local_unitary(psi, party, oracles::random_unitary_2(engine));
    CHECK(ggm(psi, CutPolicy::All).value == doctest::Approx(before).epsilon(1e-10));
  }
}

TEST_CASE("default cut policy switches to the reduced scan at eight parties") {
  CHECK(default_cut_policy(7) == CutPolicy::All);
  CHECK(default_cut_policy(8) == CutPolicy::Reduced);
}

TEST_CASE("concurrence of pure and Werner benchmarks") {
  CHECK(concurrence(to_mixed(phi_plus())) == doctest::Approx(1.0).epsilon(1e-12));
  Vector v = Vector::Zero(4);
  v(1) = 1.0;
  CHECK(concurrence(to_mixed(PureState(std::move(v)))) == doctest::Approx(0.0));
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.858, 1.0}) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(concurrence(werner(p)) == doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK_THROWS_AS(concurrence(to_mixed(ghz())), std::invalid_argument);
}

TEST_CASE("tangle separates the GHZ and W classes") {
  CHECK(tangle(ghz()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(tangle(w_state())) < 1e-12);
  const PureState biseparable = tensor(PureState([] {
                                         Vector v = Vector::Zero(2);
                                         v(0) = 1.0;
                                         return v;
                                       }()),
                                       phi_plus());
  CHECK(std::abs(tangle(biseparable)) < 1e-12);
  CHECK_THROWS_AS(tangle(phi_plus()), std::invalid_argument);
}

TEST_CASE("tangle of the generalized GHZ line is sin^2(2z)") {
  for (double z = 0.05; z <= kPi / 4.0 + 1e-9; z += 0.1) {
    const double s = std::sin(2.0 * z);
    CHECK(tangle(gghz(z)) == doctest::Approx(s * s).epsilon(1e-10));
  }
}

TEST_CASE("negativity benchmarks and the PPT boundary") {
  CHECK(negativity(to_mixed(phi_plus()), Bipartition({1}, 2)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  std::mt19937_64 engine(33);
  const MixedState sep = tensor(oracles::random_mixed(1, engine), oracles::random_mixed(1, engine));
  CHECK(negativity(sep, Bipartition({1}, 2)) < 1e-12);
  for (double p : {0.2, 1.0 / 3.0, 0.5, 0.858, 1.0}) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 4.0);
    CHECK(negativity(werner(p), Bipartition({1}, 2)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("negativity from the partial transpose equals the Schmidt route") {
  std::mt19937_64 engine(34);
  for (int rep = 0; rep < 6; ++rep) {
    const PureState psi = oracles::random_pure(4, engine);
    const Bipartition cut(rep % 2 ? std::vector<int>{1, 2} : std::vector<int>{2}, 4);
    const auto spectrum = hermitian_eigenvalues(reduced_density(psi, cut.side_a()).matrix());
    double root_sum = 0.0;
    for (double e : spectrum) root_sum += std::sqrt(std::max(0.0, e));
    CHECK(negativity(to_mixed(psi), cut) ==
          doctest::Approx((root_sum * root_sum - 1.0) / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("logarithmic negativity composes with negativity") {
  CHECK(log_negativity(to_mixed(phi_plus()), Bipartition({1}, 2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 engine(35);
  const MixedState sep = tensor(oracles::random_mixed(1, engine), oracles::random_mixed(1, engine));
  CHECK(log_negativity(sep, Bipartition({1}, 2)) < 1e-12);
  const double p = 0.858;
  const double expected = std::log2(2.0 * (3.0 * p - 1.0) / 4.0 + 1.0);
  CHECK(log_negativity(werner(p), Bipartition({1}, 2)) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("monogamy score of the GHZ state with the first party in focus") {
  const MonogamyReport report = monogamy_score_negativity(to_mixed(ghz()), 1);
  CHECK(report.value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(report.focus_vs_rest == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(report.pairwise.size() == 2);
  double rebuilt = report.focus_vs_rest;
  for (double term : report.pairwise) rebuilt -= term;
  CHECK(rebuilt == doctest::Approx(report.value).epsilon(1e-12));
}

TEST_CASE("monogamy score vanishes on product states and is never positive for an unentangled focus") {
  std::mt19937_64 engine(36);
  const PureState product =
      tensor(tensor(oracles::random_pure(1, engine), oracles::random_pure(1, engine)),
             oracles::random_pure(1, engine));
  CHECK(std::abs(monogamy_score_negativity(to_mixed(product), 1).value) < 1e-12);

  const PureState focus_free = tensor(oracles::random_pure(1, engine), phi_plus());
  const MonogamyReport report = monogamy_score_negativity(to_mixed(focus_free), 1);
  CHECK(report.value <= 1e-12);
  CHECK(std::abs(report.value) < 1e-10);  // focus is product with the rest
  CHECK_THROWS_AS(monogamy_score_negativity(werner(0.5), 1), std::invalid_argument);
}

TEST_CASE("entanglement entropy of the NME line") {
  CHECK(entanglement_entropy(phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 engine(37);
  const PureState product = tensor(oracles::random_pure(1, engine), oracles::random_pure(1, engine));
  CHECK(entanglement_entropy(product) < 1e-10);
  const double c = std::cos(kPi / 8.0);
  CHECK(entanglement_entropy(nme(kPi / 8.0)) ==
        doctest::Approx(oracles::binary_entropy(c * c)).epsilon(1e-12));
  CHECK_THROWS_AS(entanglement_entropy(ghz()), std::invalid_argument);
}
