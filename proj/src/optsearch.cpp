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

#include "qinflate/optsearch.hpp"

#include <algorithm>
#include <cmath>

namespace qinflate {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kAngleStepInit = kPi / 8.0;

constexpr double kGolden = 0.61803398874989484820;

bool is_theta_dim(std::size_t dim) { return dim % 2 == 0; }

double clamp_angle(std::size_t dim, double value) {
  if (is_theta_dim(dim)) return std::clamp(value, 0.0, kPi);
  value = std::fmod(value, kTwoPi);
  if (value < 0.0) value += kTwoPi;
  return value;
}

// One coordinate-descent pass from `angles`, shrinking the step on failure.
double descend(const AuxObjective& objective, std::vector<double>& angles, double value,
               long& evals, long budget, bool& exhausted, double initial_step,
               double min_step) {
  double step = initial_step;
  while (step >= min_step) {
    bool improved = false;
    for (std::size_t d = 0; d < angles.size(); ++d) {
      for (double sign : {1.0, -1.0}) {
        if (evals >= budget) {
          exhausted = true;
          return value;
        }
        const double candidate = clamp_angle(d, angles[d] + sign * step);
        if (candidate == angles[d]) continue;
        const double saved = angles[d];
        angles[d] = candidate;
        ++evals;
        const double v = objective(angles);
        if (v > value) {
          value = v;
          improved = true;
          break;  // keep moving this coordinate next sweep
        }
        angles[d] = saved;
      }
    }
    if (!improved) step /= 2.0;
  }
  return value;
}

// Nelder-Mead ascent from one start.  Coordinate-wise descent alone stalls
// on the diagonal ridges these objectives develop when the maximizing
// bipartition couples two angles, so each start runs a simplex first and a
// coordinate polish after.
double nelder_mead(const AuxObjective& objective, std::vector<double>& angles, double value,
                   long& evals, long budget, bool& exhausted, double angle_tol) {
  const std::size_t dims = angles.size();
  struct Vertex {
    std::vector<double> x;
    double f;
  };
  auto eval = [&](std::vector<double>& x) {
    for (std::size_t d = 0; d < dims; ++d) x[d] = clamp_angle(d, x[d]);
    ++evals;
    return objective(x);
  };
  std::vector<Vertex> simplex;
  simplex.push_back({angles, value});
  for (std::size_t d = 0; d < dims; ++d) {
    std::vector<double> x = angles;
    x[d] += kAngleStepInit;
    const double f = eval(x);
    simplex.push_back({std::move(x), f});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f > b.f; };

  double stagnation_anchor = value;
  int stagnant_iters = 0;
  for (int iter = 0; iter < 150 * static_cast<int>(dims); ++iter) {
    if (evals >= budget) {
      exhausted = true;
      break;
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    double spread = 0.0;
    for (std::size_t d = 0; d < dims; ++d)
      spread = std::max(spread, std::abs(simplex.front().x[d] - simplex.back().x[d]));
    if (spread < angle_tol) break;
    if (simplex.front().f - simplex.back().f < 1e-10) break;
    if (simplex.front().f > stagnation_anchor + 1e-11) {
      stagnation_anchor = simplex.front().f;
      stagnant_iters = 0;
    } else if (++stagnant_iters > 12 + 4 * static_cast<int>(dims)) {
      break;
    }

    std::vector<double> centroid(dims, 0.0);
    for (std::size_t v = 0; v + 1 < simplex.size(); ++v)
      for (std::size_t d = 0; d < dims; ++d) centroid[d] += simplex[v].x[d];
    for (double& c : centroid) c /= static_cast<double>(dims);
    Vertex& worst = simplex.back();

    auto blend = [&](double t) {
      std::vector<double> x(dims);
      for (std::size_t d = 0; d < dims; ++d) x[d] = centroid[d] + t * (centroid[d] - worst.x[d]);
      return x;
    };
    std::vector<double> reflected = blend(1.0);
    const double fr = eval(reflected);
    if (fr > simplex.front().f) {
      std::vector<double> expanded = blend(2.0);
      const double fe = eval(expanded);
      if (fe > fr)
        worst = {std::move(expanded), fe};
      else
        worst = {std::move(reflected), fr};
    } else if (fr > simplex[simplex.size() - 2].f) {
      worst = {std::move(reflected), fr};
    } else {
      std::vector<double> contracted = blend(fr > worst.f ? 0.5 : -0.5);
      const double fc = eval(contracted);
      if (fc > std::max(fr, worst.f)) {
        worst = {std::move(contracted), fc};
      } else {
        for (std::size_t v = 1; v < simplex.size(); ++v) {
          for (std::size_t d = 0; d < dims; ++d)
            simplex[v].x[d] = simplex.front().x[d] + 0.5 * (simplex[v].x[d] - simplex.front().x[d]);
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  angles = simplex.front().x;
  return simplex.front().f;
}

double refine_start(const AuxObjective& objective, std::vector<double>& angles, double value,
                    long& evals, long budget, bool& exhausted, double angle_tol) {
  value = nelder_mead(objective, angles, value, evals, budget, exhausted, angle_tol);
  return descend(objective, angles, value, evals, budget, exhausted, kAngleStepInit / 4.0,
                 angle_tol);
}

}  // namespace

AuxOptResult max_over_aux(const AuxObjective& objective, const SearchSpec& spec,
                          std::uint64_t seed, std::span<const double> warm_start) {
  AuxOptResult result;
  const int dims = spec.aux_dimension;
  if (dims == 0) {
    result.value = objective({});
    result.evals_used = 1;
    result.aux_independent = true;
    return result;
  }
  if (spec.starts < 1) throw std::invalid_argument("max_over_aux: starts must be >= 1");
  if (!warm_start.empty() && static_cast<int>(warm_start.size()) != dims)
    throw std::invalid_argument("max_over_aux: warm start has the wrong dimension");

  // Start candidates: warm start, the all-zero corner, then Latin-hypercube
  // fill from the seeded stream.
  std::vector<std::vector<double>> starts;
  if (!warm_start.empty()) starts.emplace_back(warm_start.begin(), warm_start.end());
  starts.emplace_back(dims, 0.0);
  Rng rng(seed);
  const int lhs_count = std::max(0, spec.starts - static_cast<int>(starts.size()));
  if (lhs_count > 0) {
    std::vector<std::vector<int>> strata(dims, std::vector<int>(lhs_count));
    for (int d = 0; d < dims; ++d) {
      for (int s = 0; s < lhs_count; ++s) strata[d][s] = s;
      for (int s = lhs_count - 1; s > 0; --s) {
        const int j = static_cast<int>(rng.uniform() * (s + 1));
        std::swap(strata[d][s], strata[d][std::min(j, s)]);
      }
    }
    for (int s = 0; s < lhs_count; ++s) {
      std::vector<double> point(dims);
      for (int d = 0; d < dims; ++d) {
        const double width = is_theta_dim(d) ? kPi : kTwoPi;
        point[d] = (strata[d][s] + rng.uniform()) / lhs_count * width;
      }
      starts.push_back(std::move(point));
    }
  }

  long evals = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  double worst_final = std::numeric_limits<double>::infinity();
  std::vector<double> best_angles;
  for (auto& start : starts) {
    ++evals;
    double value = objective(start);
    value = refine_start(objective, start, value, evals, spec.max_evals,
                         result.budget_exhausted, spec.angle_tol);
    if (value > best_value) {
      best_value = value;
      best_angles = start;
    }
    worst_final = std::min(worst_final, value);
    if (result.budget_exhausted) break;
  }
  result.value = best_value;
  result.angles = std::move(best_angles);
  result.evals_used = evals;
  result.aux_independent =
      starts.size() >= 2 && (best_value - worst_final) < spec.tol_value;
  return result;
}

OptimizationResult critical_point(const ObjectiveFamily& family, const SearchSpec& spec,
                                  std::uint64_t seed) {
  if (!(spec.lambda_lo >= 0.0 && spec.lambda_hi <= 1.0 && spec.lambda_step > 0.0 &&
        spec.lambda_lo < spec.lambda_hi))
    throw std::invalid_argument("critical_point: malformed lambda grid");

  OptimizationResult result;
  std::vector<double> warm;
  std::vector<double> grid;
  for (double l = spec.lambda_lo; l <= spec.lambda_hi + 1e-12; l += spec.lambda_step)
    grid.push_back(std::min(l, spec.lambda_hi));

  std::size_t best_idx = 0;
  bool any_aux_dependent = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AuxObjective obj = family(grid[i]);
    const AuxOptResult r = max_over_aux(obj, spec, derive_seed(seed, i), warm);
    result.evals_used += r.evals_used;
    result.budget_exhausted |= r.budget_exhausted;
    if (!r.aux_independent) any_aux_dependent = true;
    warm = r.angles;
    result.curve.emplace_back(grid[i], r.value);
    if (r.value > result.curve[best_idx].second) best_idx = i;
    if (i == best_idx && !r.angles.empty()) result.aux_opt = r.angles;
  }

  // Golden-section narrowing of the bracket around the best grid point.
  double lo = grid[best_idx == 0 ? 0 : best_idx - 1];
  double hi = grid[std::min(best_idx + 1, grid.size() - 1)];
  result.lambda_c = grid[best_idx];
  result.value_c = result.curve[best_idx].second;

  std::vector<double> refine_warm = result.aux_opt;
  auto eval_at = [&](double lambda, std::uint64_t salt) {
    const AuxObjective obj = family(lambda);
    const AuxOptResult r = max_over_aux(obj, spec, derive_seed(seed, salt), refine_warm);
    result.evals_used += r.evals_used;
    result.budget_exhausted |= r.budget_exhausted;
    if (!r.angles.empty()) refine_warm = r.angles;
    if (r.value > result.value_c) {
      result.value_c = r.value;
      result.lambda_c = lambda;
      result.aux_opt = r.angles;
    }
    return r.value;
  };

  if (hi - lo > spec.tol_param) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = eval_at(x1, 1000001);
    double f2 = eval_at(x2, 1000002);
    std::uint64_t salt = 1000003;
    while (hi - lo > spec.tol_param) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = eval_at(x2, salt++);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = eval_at(x1, salt++);
      }
    }
  }

  result.aux_independent = spec.aux_dimension == 0 || !any_aux_dependent;
  return result;
}

double pb_ggm_value(const PureState& seed, int rounds, const WeakPovm& povm,
                    std::span<const double> angles, int outcome, CutPolicy policy) {
  if (static_cast<int>(angles.size()) != 2 * rounds)
    throw std::invalid_argument("pb_ggm_value: need two angles per round");
  PureState state = seed;
  for (int r = 0; r < rounds; ++r) {
    const AuxQubit aux{angles[2 * r], angles[2 * r + 1]};
    auto out = pb_round(state, aux, povm, outcome);
    if (!out.has_state()) return 0.0;  // vanishing branch carries no entanglement to report
    state = std::move(*out.post_state);
  }
  return ggm(state, policy).value;
}

double eb_ggm_value(const PureState& seed, int rounds, const WeakPovm& povm, int outcome,
                    CutPolicy policy) {
  PureState state = seed;
  for (int r = 0; r < rounds; ++r) {
    auto out = eb_round(state, seed, povm, outcome);
    if (!out.has_state()) return 0.0;
    state = std::move(*out.post_state);
  }
  return ggm(state, policy).value;
}

double werner_monogamy_value(const MixedState& seed, int rounds, const WeakPovm& povm,
                             std::span<const double> angles, int outcome) {
  if (static_cast<int>(angles.size()) != 2 * rounds)
    throw std::invalid_argument("werner_monogamy_value: need two angles per round");
  MixedState state = seed;
  for (int r = 0; r < rounds; ++r) {
    const AuxQubit aux{angles[2 * r], angles[2 * r + 1]};
    auto out = pb_round(state, aux, povm, outcome);
    if (!out.has_state()) return 0.0;
    state = std::move(*out.post_state);
  }
  return monogamy_score_negativity(state, 1).value;
}

double werner_eb_monogamy_value(const MixedState& seed, int rounds, const WeakPovm& povm,
                                int outcome) {
  MixedState state = seed;
  for (int r = 0; r < rounds; ++r) {
    auto out = eb_round(state, seed, povm, outcome);
    if (!out.has_state()) return 0.0;
    state = std::move(*out.post_state);
  }
  return monogamy_score_negativity(state, 1).value;
}

ObjectiveFamily pb_ggm_family(PureState seed, int rounds, CutPolicy policy) {
  return [seed = std::move(seed), rounds, policy](double lambda) -> AuxObjective {
    WeakPovm povm(lambda);
    return [seed, rounds, policy, povm = std::move(povm)](std::span<const double> angles) {
      return pb_ggm_value(seed, rounds, povm, angles, 1, policy);
    };
  };
}

ObjectiveFamily eb_ggm_family(PureState seed, int rounds, CutPolicy policy) {
  return [seed = std::move(seed), rounds, policy](double lambda) -> AuxObjective {
    WeakPovm povm(lambda);
    return [seed, rounds, policy, povm = std::move(povm)](std::span<const double>) {
      return eb_ggm_value(seed, rounds, povm, 1, policy);
    };
  };
}

OptimizationResult maximize_monogamy(double werner_p, int rounds, const SearchSpec& spec,
                                     std::uint64_t seed) {
  SearchSpec local = spec;
  local.aux_dimension = 2 * rounds;
  const MixedState input = werner(werner_p);
  ObjectiveFamily family = [input, rounds](double lambda) -> AuxObjective {
    WeakPovm povm(lambda);
    return [input, rounds, povm = std::move(povm)](std::span<const double> angles) {
      return werner_monogamy_value(input, rounds, povm, angles, 1);
    };
  };
  return critical_point(family, local, seed);
}

double analytic_ggm_curve_maxent(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("analytic_ggm_curve_maxent: lambda must lie in [0,1]");
  if (lambda <= 2.0 / 3.0) {
    const double inner = (1.0 - lambda) *
                         (1.0 + lambda + std::sqrt((1.0 - lambda) * (1.0 + 3.0 * lambda)));
    return 0.5 - std::sqrt(2.0) / 4.0 * std::sqrt(inner);
  }
  return 1.0 - 0.5 * (1.0 + lambda);
}

double analytic_lambda_c_nme(double z) {
  if (!(z > 0.0 && z <= kPi / 4.0 + 1e-12))
    throw std::invalid_argument("analytic_lambda_c_nme: z must lie in (0, pi/4]");
  const double cz = std::cos(z);
  const double sz = std::sin(z);
  const double csc2 = 1.0 / (sz * sz);
  const double num = 8.0 * (std::pow(cz, 4) + csc2 * std::sqrt(cz * cz * std::pow(sz, 10)));
  const double den = 7.0 + std::cos(4.0 * z);
  return num / den;
}

NmeEigs analytic_nme_eigs(double z, double lambda, double theta1) {
  const double c2z = std::cos(2.0 * z);
  const double c4z = std::cos(4.0 * z);
  const double ct = std::cos(theta1);
  const double c2t = std::cos(2.0 * theta1);
  const double denom = 4.0 * (1.0 - lambda * c2z * ct);
  const double cross = std::sqrt((1.0 - lambda) * (1.0 + 3.0 * lambda));

  const double x_a3 = (1.0 - lambda) *
                      ((1.0 + lambda) * (3.0 + c4z) + cross * (1.0 - c4z) - 8.0 * lambda * c2z * ct);
  const double x_a1 = 2.0 + 3.0 * lambda * lambda + (2.0 - lambda * lambda) * c4z -
                      2.0 * lambda * c2z * (4.0 * ct - lambda * c2z * c2t);

  NmeEigs eigs;
  eigs.e_a3 = 0.5 + std::sqrt(std::max(0.0, x_a3)) / denom;
  eigs.e_a1 = 0.5 + std::sqrt(std::max(0.0, x_a1)) / denom;
  return eigs;
}

double analytic_ggm_c_nme(double z) {
  const double lc = analytic_lambda_c_nme(z);
  return 1.0 - analytic_nme_eigs(z, lc, 0.0).e_a1;
}

EbEigs analytic_eb_eigs_maxent(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("analytic_eb_eigs_maxent: lambda must lie in [0,1]");
  const double cross = std::sqrt((1.0 - lambda) * (1.0 + 3.0 * lambda));
  EbEigs eigs;
  eigs.e_a1a2 = (3.0 - lambda + cross +
                 2.0 * std::sqrt(2.0) * std::sqrt((1.0 - lambda) * (1.0 + lambda + cross))) /
                8.0;
  eigs.e_a2a3 = (1.0 + 3.0 * lambda) / 4.0;
  return eigs;
}

}  // namespace qinflate
