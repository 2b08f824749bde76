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
 * @file optsearch.hpp
 * @brief Maximization of GGM / negativity monogamy score over the sharpness
 *        parameter and the auxiliary-state angles, plus the closed-form
 *        critical expressions used to cross-check the numerics.
 *
 * The search is derivative-free by construction: the objectives are smooth
 * in the angles but only piecewise smooth in lambda (the maximizing
 * bipartition switches branches), so each lambda gets a multi-start
 * coordinate descent over the angle box and the lambda axis itself is
 * scanned on a grid and then narrowed by golden-section refinement.
 */

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qinflate/entmeasures.hpp"
#include "qinflate/inflation.hpp"

namespace qinflate {

/// Angle layout everywhere: [theta_1, phi_1, theta_2, phi_2, ...] with
/// theta in [0, pi] (clamped) and phi in [0, 2 pi) (wrapped).
struct SearchSpec {
  double lambda_lo = 0.0;
  double lambda_hi = 1.0;
  double lambda_step = 0.005;
  int aux_dimension = 0;   // number of angles, 2 per PB round
  int starts = 8;          // multi-start count per lambda
  double tol_value = 1e-6;
  double tol_param = 1e-4;      // final golden-section bracket width
  double angle_tol = 1e-5;      // angle resolution at which a start stops
  long max_evals = 2000000;     // per max_over_aux call
};

/// Objective over the angles at one fixed lambda.
using AuxObjective = std::function<double(std::span<const double>)>;
/// lambda -> angle objective; the POVM is built once per lambda.
using ObjectiveFamily = std::function<AuxObjective(double lambda)>;

struct AuxOptResult {
  double value = 0.0;
  std::vector<double> angles;
  long evals_used = 0;
  bool aux_independent = false;  // range over starts below tol_value
  bool budget_exhausted = false;
};

struct OptimizationResult {
  double lambda_c = 0.0;
  std::vector<double> aux_opt;
  double value_c = 0.0;
  std::vector<std::pair<double, double>> curve;  // (lambda, max-over-aux value)
  long evals_used = 0;
  bool aux_independent = false;
  bool budget_exhausted = false;
};

/// Multi-start coordinate descent over the angle box.  Starts are the warm
/// start (when given), the all-zero corner, and Latin-hypercube points drawn
/// from `seed`; each start shrinks its step from pi/8 down to 1e-5.
AuxOptResult max_over_aux(const AuxObjective& objective, const SearchSpec& spec,
                          std::uint64_t seed, std::span<const double> warm_start = {});

/// Scan the lambda grid (warm-starting each point from its predecessor),
/// then golden-section the bracket around the best grid point.
OptimizationResult critical_point(const ObjectiveFamily& family, const SearchSpec& spec,
                                  std::uint64_t seed);

/// GGM of the PB output after `rounds` rounds from `seed`, with auxiliary
/// angles laid out as above and a fixed outcome per round.
double pb_ggm_value(const PureState& seed, int rounds, const WeakPovm& povm,
                    std::span<const double> angles, int outcome, CutPolicy policy);

/// GGM of the EB output (no auxiliary parameters).
double eb_ggm_value(const PureState& seed, int rounds, const WeakPovm& povm, int outcome,
                    CutPolicy policy);

/// Negativity monogamy score (focus party 1) of the Werner PB output.
double werner_monogamy_value(const MixedState& seed, int rounds, const WeakPovm& povm,
                             std::span<const double> angles, int outcome);

/// Same for the EB scheme with Werner copies.
double werner_eb_monogamy_value(const MixedState& seed, int rounds, const WeakPovm& povm,
                                int outcome);

/// Ready-made objective families.
ObjectiveFamily pb_ggm_family(PureState seed, int rounds, CutPolicy policy);
ObjectiveFamily eb_ggm_family(PureState seed, int rounds, CutPolicy policy);

/// Maximize the monogamy score of the Werner(p) PB output over lambda and
/// the auxiliary angles.
OptimizationResult maximize_monogamy(double werner_p, int rounds, const SearchSpec& spec,
                                     std::uint64_t seed);

/// Closed-form max-over-aux GGM of the round-1 PB output from |phi+>;
/// branch switch at lambda = 2/3.
double analytic_ggm_curve_maxent(double lambda);

/// Critical sharpness for the NME(z) seed, z in (0, pi/4].
double analytic_lambda_c_nme(double z);

struct NmeEigs {
  double e_a3 = 0.0;  // max eigenvalue of the third party's marginal
  double e_a1 = 0.0;  // max eigenvalue of the first party's marginal
};

/// Marginal spectra maxima of the round-1 PB output from NME(z) at auxiliary
/// angle theta1 (the value is phi-independent).
NmeEigs analytic_nme_eigs(double z, double lambda, double theta1);

/// Critical GGM for the NME(z) seed: 1 - e_A1 at lambda_c(z), theta1 = 0.
double analytic_ggm_c_nme(double z);

struct EbEigs {
  double e_a1a2 = 0.0;
  double e_a2a3 = 0.0;
};

/// Competing two-site marginal maxima of the round-1 EB output from |phi+>.
EbEigs analytic_eb_eigs_maxent(double lambda);

}  // namespace qinflate
