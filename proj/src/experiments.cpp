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

#include "qinflate/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qinflate/optsearch.hpp"
#include "qinflate/parallel.hpp"

namespace qinflate {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Parameter handling

class Params {
 public:
  Params(const std::vector<ExperimentParam>& decl,
         const std::map<std::string, std::string>& overrides) {
    for (const auto& p : decl) values_[p.key] = p.default_value;
    for (const auto& [key, value] : overrides) {
      auto it = values_.find(key);
      if (it == values_.end())
        throw std::invalid_argument("unknown parameter '" + key + "'");
      it->second = value;
    }
  }

  const std::string& get(const std::string& key) const { return values_.at(key); }

  double get_double(const std::string& key) const { return std::stod(get(key)); }

  int get_int(const std::string& key) const { return std::stoi(get(key)); }

  std::vector<double> get_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
  }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct Ctx {
  const Params& params;
  std::uint64_t seed;
  int jobs;
  std::optional<CutPolicy> policy_override;
  std::string experiment_id;

  CutPolicy policy_for(int parties) const {
    return policy_override.value_or(default_cut_policy(parties));
  }
};

ResultTable make_table(const Ctx&, std::string name, std::vector<std::string> columns) {
  ResultTable t;
  t.name = std::move(name);
  t.columns = {"experiment_id", "seed"};
  t.columns.insert(t.columns.end(), columns.begin(), columns.end());
  return t;
}

void push_row(ResultTable& table, const Ctx& ctx, std::vector<std::string> cells) {
  std::vector<std::string> row = {ctx.experiment_id, fmt(ctx.seed)};
  row.insert(row.end(), cells.begin(), cells.end());
  table.rows.push_back(std::move(row));
}

// ---------------------------------------------------------------------------
// Shared computations

std::vector<double> lambda_grid(double step) {
  std::vector<double> grid;
  for (double l = 0.0; l <= 1.0 + 1e-12; l += step) grid.push_back(std::min(l, 1.0));
  return grid;
}

SearchSpec sweep_spec(int aux_dim, double lambda_step, int starts) {
  SearchSpec spec;
  spec.lambda_step = lambda_step;
  spec.aux_dimension = aux_dim;
  spec.starts = starts;
  return spec;
}

struct CurvePoint {
  double lambda;
  double value;
  std::vector<double> angles;
};

// Warm-started max-over-aux sweep along the lambda grid.
std::vector<CurvePoint> maxaux_curve(const ObjectiveFamily& family, const SearchSpec& spec,
                                     std::uint64_t seed) {
  std::vector<CurvePoint> out;
  std::vector<double> warm;
  const auto grid = lambda_grid(spec.lambda_step);
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AuxOptResult r = max_over_aux(family(grid[i]), spec, derive_seed(seed, i), warm);
    warm = r.angles;
    out.push_back({grid[i], r.value, r.angles});
  }
  return out;
}

struct SampleResult {
  double e_in = 0.0;
  double gc_r1 = 0.0, lc_r1 = 0.0;
  double gc_r2 = 0.0, lc_r2 = 0.0;
  double gc_eb = 0.0, lc_eb = 0.0;
};

OptimizationResult pb_critical(const PureState& seed, int rounds, const SearchSpec& base,
                               std::uint64_t seed_value, CutPolicy policy) {
  SearchSpec spec = base;
  spec.aux_dimension = 2 * rounds;
  return critical_point(pb_ggm_family(seed, rounds, policy), spec, seed_value);
}

OptimizationResult eb_critical(const PureState& seed, int rounds, const SearchSpec& base,
                               std::uint64_t seed_value, CutPolicy policy) {
  SearchSpec spec = base;
  spec.aux_dimension = 0;
  return critical_point(eb_ggm_family(seed, rounds, policy), spec, seed_value);
}

struct HistogramRow {
  double lo, hi, frequency;
  int count;
};

std::vector<HistogramRow> histogram(const std::vector<double>& values, int bins, double lo,
                                    double hi) {
  std::vector<HistogramRow> rows;
  if (values.empty() || bins < 1) return rows;
  const double width = (hi - lo) / bins;
  std::vector<int> counts(bins, 0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    ++counts[b];
  }
  for (int b = 0; b < bins; ++b)
    rows.push_back({lo + b * width, lo + (b + 1) * width,
                    static_cast<double>(counts[b]) / values.size(), counts[b]});
  return rows;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

// ---------------------------------------------------------------------------
// Registry entries

using Runner = std::function<std::vector<ResultTable>(const Ctx&)>;

struct Entry {
  ExperimentInfo info;
  Runner run;
};

std::vector<ResultTable> run_fig3(const Ctx& ctx) {
  const int rounds = ctx.params.get_int("rounds");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable curve = make_table(ctx, "ggm_vs_lambda", {"round", "lambda", "ggm"});
  const PureState seed = phi_plus();
  std::vector<std::vector<CurvePoint>> per_round(rounds);
  parallel_for(ctx.jobs, rounds, [&](std::size_t r) {
    const int n = static_cast<int>(r) + 1;
    const SearchSpec spec = sweep_spec(2 * n, step, starts);
    per_round[r] = maxaux_curve(pb_ggm_family(seed, n, ctx.policy_for(2 + n)), spec,
                                derive_seed(ctx.seed, r));
  });
  for (int r = 0; r < rounds; ++r)
    for (const CurvePoint& p : per_round[r])
      push_row(curve, ctx, {fmt(r + 1), fmt(p.lambda), fmt(p.value)});
  return {curve};
}

std::vector<ResultTable> run_fig4(const Ctx& ctx) {
  const double z_min = ctx.params.get_double("z_deg_min");
  const double z_max = ctx.params.get_double("z_deg_max");
  const double z_step = ctx.params.get_double("z_deg_step");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable table = make_table(
      ctx, "critical_vs_z",
      {"z_deg", "lambda_c", "ggm_c", "lambda_c_analytic", "ggm_c_analytic", "low_confidence"});
  std::vector<double> zs;
  for (double z = z_min; z <= z_max + 1e-9; z += z_step) zs.push_back(z);
  std::vector<std::array<double, 4>> results(zs.size());
  parallel_for(ctx.jobs, zs.size(), [&](std::size_t i) {
    const double z = zs[i] * kDegToRad;
    const SearchSpec spec = sweep_spec(2, step, starts);
    const auto r = pb_critical(nme(z), 1, spec, derive_seed(ctx.seed, i), ctx.policy_for(3));
    results[i] = {r.lambda_c, r.value_c, analytic_lambda_c_nme(z), analytic_ggm_c_nme(z)};
  });
  for (std::size_t i = 0; i < zs.size(); ++i)
    push_row(table, ctx,
             {fmt(zs[i]), fmt(results[i][0]), fmt(results[i][1]), fmt(results[i][2]),
              fmt(results[i][3]), zs[i] < 8.02 ? "1" : "0"});
  return {table};
}

std::vector<ResultTable> run_fig5(const Ctx& ctx) {
  const double z = ctx.params.get_double("z");
  const int rounds = ctx.params.get_int("rounds");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable table = make_table(
      ctx, "logneg_vs_lambda", {"seed_family", "z", "round", "lambda", "log_negativity", "ggm"});

  struct Job {
    const char* family;
    double z;
    int round;
  };
  std::vector<Job> jobs;
  for (int r = 1; r <= rounds; ++r) {
    jobs.push_back({"maxent", kPi / 4.0, r});
    jobs.push_back({"nme", z, r});
  }
  std::vector<std::vector<std::array<double, 3>>> rows(jobs.size());
  parallel_for(ctx.jobs, jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    const PureState seed = nme(job.z);
    const SearchSpec spec = sweep_spec(2 * job.round, step, starts);
    const auto curve = maxaux_curve(pb_ggm_family(seed, job.round, ctx.policy_for(2 + job.round)),
                                    spec, derive_seed(ctx.seed, j));
    for (const CurvePoint& p : curve) {
      // Rebuild the output at the GGM-optimal angles, then track what is
      // left between the first two parties.
      WeakPovm povm(p.lambda);
      PureState state = seed;
      for (int r = 0; r < job.round; ++r) {
        const AuxQubit aux{p.angles[2 * r], p.angles[2 * r + 1]};
        auto out = pb_round(state, aux, povm, 1);
        state = std::move(*out.post_state);
      }
      const MixedState marginal = reduced_density(state, {1, 2});
      const double ln = log_negativity(marginal, Bipartition({1}, 2));
      rows[j].push_back({p.lambda, ln, p.value});
    }
  });
  for (std::size_t j = 0; j < jobs.size(); ++j)
    for (const auto& r : rows[j])
      push_row(table, ctx,
               {jobs[j].family, fmt(jobs[j].z), fmt(jobs[j].round), fmt(r[0]), fmt(r[1]),
                fmt(r[2])});
  return {table};
}

std::vector<ResultTable> run_fig6(const Ctx& ctx) {
  const std::vector<double> lambdas = ctx.params.get_list("lambda_list");
  const double z_step = ctx.params.get_double("z_deg_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable table = make_table(ctx, "ggm_vs_ein", {"lambda", "z_deg", "e_in", "ggm"});
  std::vector<double> zs;
  for (double zd = z_step; zd <= 45.0 + 1e-9; zd += z_step) zs.push_back(zd);
  std::vector<std::vector<std::array<double, 3>>> rows(lambdas.size());
  parallel_for(ctx.jobs, lambdas.size(), [&](std::size_t i) {
    SearchSpec spec = sweep_spec(2, 0.01, starts);
    const WeakPovm povm(lambdas[i]);
    std::vector<double> warm;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const PureState seed = nme(zs[k] * kDegToRad);
      const AuxObjective obj = [&](std::span<const double> angles) {
        return pb_ggm_value(seed, 1, povm, angles, 1, ctx.policy_for(3));
      };
      const AuxOptResult r = max_over_aux(obj, spec, derive_seed(ctx.seed, i * 1000 + k), warm);
      warm = r.angles;
      rows[i].push_back({zs[k], entanglement_entropy(seed), r.value});
    }
  });
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (const auto& r : rows[i])
      push_row(table, ctx, {fmt(lambdas[i]), fmt(r[0]), fmt(r[1]), fmt(r[2])});
  return {table};
}

std::vector<ResultTable> run_fig7(const Ctx& ctx) {
  const std::vector<double> z_degs = ctx.params.get_list("z_deg_list");
  const int rounds_max = ctx.params.get_int("rounds_max");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable table =
      make_table(ctx, "critical_vs_round", {"z_deg", "round", "lambda_c", "ggm_c"});
  struct Job {
    double z_deg;
    int round;
  };
  std::vector<Job> jobs;
  for (double zd : z_degs)
    for (int r = 1; r <= rounds_max; ++r) jobs.push_back({zd, r});
  std::vector<std::array<double, 2>> results(jobs.size());
  parallel_for(ctx.jobs, jobs.size(), [&](std::size_t j) {
    const SearchSpec spec = sweep_spec(2 * jobs[j].round, step, starts);
    const auto r = pb_critical(nme(jobs[j].z_deg * kDegToRad), jobs[j].round, spec,
                               derive_seed(ctx.seed, j), ctx.policy_for(2 + jobs[j].round));
    results[j] = {r.lambda_c, r.value_c};
  });
  for (std::size_t j = 0; j < jobs.size(); ++j)
    push_row(table, ctx,
             {fmt(jobs[j].z_deg), fmt(jobs[j].round), fmt(results[j][0]), fmt(results[j][1])});
  return {table};
}

std::vector<ResultTable> run_fig8(const Ctx& ctx) {
  const int samples = ctx.params.get_int("samples");
  const int bins = ctx.params.get_int("bins");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  std::vector<SampleResult> results(samples);
  parallel_for(ctx.jobs, samples, [&](std::size_t i) {
    Rng rng(derive_seed(ctx.seed, i));
    const PureState seed = haar_pure(2, rng);
    SampleResult& s = results[i];
    s.e_in = entanglement_entropy(seed);
    const SearchSpec spec1 = sweep_spec(2, step, starts);
    const auto r1 =
        pb_critical(seed, 1, spec1, derive_seed(ctx.seed, 2 * i + 1), ctx.policy_for(3));
    s.gc_r1 = r1.value_c;
    s.lc_r1 = r1.lambda_c;
    const SearchSpec spec2 = sweep_spec(4, step, starts);
    const auto r2 =
        pb_critical(seed, 2, spec2, derive_seed(ctx.seed, 2 * i + 2), ctx.policy_for(4));
    s.gc_r2 = r2.value_c;
    s.lc_r2 = r2.lambda_c;
  });

  ResultTable per_sample = make_table(
      ctx, "haar_samples",
      {"sample", "e_in", "gc_round1", "lambda_c_round1", "gc_round2", "lambda_c_round2"});
  std::vector<double> g1, g2;
  for (int i = 0; i < samples; ++i) {
    const SampleResult& s = results[i];
    push_row(per_sample, ctx,
             {fmt(i), fmt(s.e_in), fmt(s.gc_r1), fmt(s.lc_r1), fmt(s.gc_r2), fmt(s.lc_r2)});
    g1.push_back(s.gc_r1);
    g2.push_back(s.gc_r2);
  }
  ResultTable hist = make_table(ctx, "gc_histogram", {"round", "bin_lo", "bin_hi", "frequency"});
  for (const auto& row : histogram(g1, bins, 0.0, 0.5))
    push_row(hist, ctx, {"1", fmt(row.lo), fmt(row.hi), fmt(row.frequency)});
  for (const auto& row : histogram(g2, bins, 0.0, 0.5))
    push_row(hist, ctx, {"2", fmt(row.lo), fmt(row.hi), fmt(row.frequency)});
  ResultTable summary = make_table(ctx, "gc_summary", {"round", "mean", "stddev", "samples"});
  push_row(summary, ctx, {"1", fmt(mean_of(g1)), fmt(stddev_of(g1)), fmt(samples)});
  push_row(summary, ctx, {"2", fmt(mean_of(g2)), fmt(stddev_of(g2)), fmt(samples)});
  return {per_sample, hist, summary};
}

std::vector<ResultTable> run_fig9_10(const Ctx& ctx) {
  const std::vector<double> p_list = ctx.params.get_list("p_list");
  const double p_min = ctx.params.get_double("p_min");
  const double p_max = ctx.params.get_double("p_max");
  const double p_step = ctx.params.get_double("p_step");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");

  ResultTable curves = make_table(ctx, "delta_vs_lambda", {"round", "p", "lambda", "delta_n"});
  struct CurveJob {
    double p;
    int round;
  };
  std::vector<CurveJob> cjobs;
  for (double p : p_list)
    for (int r = 1; r <= 2; ++r) cjobs.push_back({p, r});
  std::vector<std::vector<CurvePoint>> ccurves(cjobs.size());
  parallel_for(ctx.jobs, cjobs.size(), [&](std::size_t j) {
    const MixedState seed = werner(cjobs[j].p);
    const int rounds = cjobs[j].round;
    ObjectiveFamily family = [seed, rounds](double lambda) -> AuxObjective {
      WeakPovm povm(lambda);
      return [seed, rounds, povm = std::move(povm)](std::span<const double> angles) {
        return werner_monogamy_value(seed, rounds, povm, angles, 1);
      };
    };
    ccurves[j] =
        maxaux_curve(family, sweep_spec(2 * rounds, step, starts), derive_seed(ctx.seed, j));
  });
  for (std::size_t j = 0; j < cjobs.size(); ++j)
    for (const CurvePoint& p : ccurves[j])
      push_row(curves, ctx, {fmt(cjobs[j].round), fmt(cjobs[j].p), fmt(p.lambda), fmt(p.value)});

  ResultTable critical = make_table(ctx, "critical_vs_p", {"round", "p", "delta_nc", "lambda_c"});
  std::vector<double> ps;
  for (double p = p_min; p <= p_max + 1e-9; p += p_step) ps.push_back(std::min(p, p_max));
  struct CritJob {
    double p;
    int round;
  };
  std::vector<CritJob> kjobs;
  for (int r = 1; r <= 2; ++r)
    for (double p : ps) kjobs.push_back({p, r});
  std::vector<std::array<double, 2>> kres(kjobs.size());
  parallel_for(ctx.jobs, kjobs.size(), [&](std::size_t j) {
    SearchSpec spec = sweep_spec(2 * kjobs[j].round, step, starts);
    const auto r =
        maximize_monogamy(kjobs[j].p, kjobs[j].round, spec, derive_seed(ctx.seed, 7000 + j));
    kres[j] = {r.value_c, r.lambda_c};
  });
  for (std::size_t j = 0; j < kjobs.size(); ++j)
    push_row(critical, ctx,
             {fmt(kjobs[j].round), fmt(kjobs[j].p), fmt(kres[j][0]), fmt(kres[j][1])});
  return {curves, critical};
}

std::vector<ResultTable> run_fig11(const Ctx& ctx) {
  const int rounds = ctx.params.get_int("rounds");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable curve = make_table(ctx, "ggm_vs_lambda", {"seed", "round", "lambda", "ggm"});
  ResultTable critical = make_table(ctx, "critical", {"seed", "round", "lambda_c", "ggm_c"});
  struct Job {
    const char* name;
    PureState seed;
    int round;
  };
  std::vector<Job> jobs;
  for (int r = 1; r <= rounds; ++r) {
    jobs.push_back({"ghz", ghz(), r});
    jobs.push_back({"w", w_state(), r});
  }
  std::vector<std::vector<CurvePoint>> curves(jobs.size());
  std::vector<std::array<double, 2>> crits(jobs.size());
  parallel_for(ctx.jobs, jobs.size(), [&](std::size_t j) {
    const SearchSpec spec = sweep_spec(2 * jobs[j].round, step, starts);
    const CutPolicy policy = ctx.policy_for(3 + jobs[j].round);
    const auto family = pb_ggm_family(jobs[j].seed, jobs[j].round, policy);
    const auto crit = critical_point(family, spec, derive_seed(ctx.seed, j));
    curves[j] = maxaux_curve(family, spec, derive_seed(ctx.seed, 100 + j));
    crits[j] = {crit.lambda_c, crit.value_c};
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (const CurvePoint& p : curves[j])
      push_row(curve, ctx, {jobs[j].name, fmt(jobs[j].round), fmt(p.lambda), fmt(p.value)});
    push_row(critical, ctx,
             {jobs[j].name, fmt(jobs[j].round), fmt(crits[j][0]), fmt(crits[j][1])});
  }
  return {curve, critical};
}

std::vector<ResultTable> run_fig12(const Ctx& ctx) {
  const int samples = ctx.params.get_int("samples");
  const int bins = ctx.params.get_int("bins");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable per_sample =
      make_table(ctx, "class_samples", {"family", "sample", "ggm_in", "gc_round1", "lambda_c"});
  ResultTable hist = make_table(ctx, "gc_histogram", {"family", "bin_lo", "bin_hi", "frequency"});
  ResultTable summary = make_table(ctx, "gc_summary", {"family", "mean", "stddev", "samples"});

  for (const std::string family : {"ghz_class", "w_class"}) {
    std::vector<std::array<double, 3>> rows(samples);
    const std::uint64_t salt = family == "ghz_class" ? 0x67686373ull : 0x77636c73ull;
    parallel_for(ctx.jobs, samples, [&](std::size_t i) {
      Rng rng(derive_seed(ctx.seed ^ salt, i));
      const PureState seed = family == "ghz_class" ? ghz_class_random(rng) : w_class_random(rng);
      const SearchSpec spec = sweep_spec(2, step, starts);
      const auto r =
          pb_critical(seed, 1, spec, derive_seed(ctx.seed ^ salt, 90000 + i), ctx.policy_for(4));
      rows[i] = {ggm(seed).value, r.value_c, r.lambda_c};
    });
    std::vector<double> gcs;
    for (int i = 0; i < samples; ++i) {
      push_row(per_sample, ctx,
               {family, fmt(i), fmt(rows[i][0]), fmt(rows[i][1]), fmt(rows[i][2])});
      gcs.push_back(rows[i][1]);
    }
    for (const auto& row : histogram(gcs, bins, 0.0, 0.5))
      push_row(hist, ctx, {family, fmt(row.lo), fmt(row.hi), fmt(row.frequency)});
    push_row(summary, ctx, {family, fmt(mean_of(gcs)), fmt(stddev_of(gcs)), fmt(samples)});
  }
  return {per_sample, hist, summary};
}

std::vector<ResultTable> run_fig13(const Ctx& ctx) {
  const int samples = ctx.params.get_int("samples");
  const int z_points = ctx.params.get_int("z_points");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  ResultTable scatter = make_table(ctx, "scatter", {"family", "sample", "ggm_in", "gc_round1"});

  // gGHZ reference line on a z grid.
  std::vector<std::array<double, 2>> ref(z_points);
  parallel_for(ctx.jobs, z_points, [&](std::size_t i) {
    const double z = (i + 1.0) / z_points * kPi / 4.0;
    const PureState seed = gghz(z);
    const SearchSpec spec = sweep_spec(2, step, starts);
    const auto r = pb_critical(seed, 1, spec, derive_seed(ctx.seed, 40000 + i), ctx.policy_for(4));
    ref[i] = {ggm(seed).value, r.value_c};
  });
  for (int i = 0; i < z_points; ++i)
    push_row(scatter, ctx, {"gghz", fmt(i), fmt(ref[i][0]), fmt(ref[i][1])});

  for (const std::string family : {"ghz_class", "w_class"}) {
    const std::uint64_t salt = family == "ghz_class" ? 0x67686373ull : 0x77636c73ull;
    std::vector<std::array<double, 2>> rows(samples);
    parallel_for(ctx.jobs, samples, [&](std::size_t i) {
      Rng rng(derive_seed(ctx.seed ^ salt, i));
      const PureState seed = family == "ghz_class" ? ghz_class_random(rng) : w_class_random(rng);
      const SearchSpec spec = sweep_spec(2, step, starts);
      const auto r =
          pb_critical(seed, 1, spec, derive_seed(ctx.seed ^ salt, 90000 + i), ctx.policy_for(4));
      rows[i] = {ggm(seed).value, r.value_c};
    });
    for (int i = 0; i < samples; ++i)
      push_row(scatter, ctx, {family, fmt(i), fmt(rows[i][0]), fmt(rows[i][1])});
  }
  return {scatter};
}

std::vector<ResultTable> run_fig15(const Ctx& ctx) {
  const std::vector<double> z_degs = ctx.params.get_list("z_deg_list");
  const int rounds = ctx.params.get_int("rounds");
  const double step = ctx.params.get_double("lambda_step");
  ResultTable table = make_table(ctx, "eb_ggm_vs_lambda", {"z_deg", "round", "lambda", "ggm"});
  struct Job {
    double z_deg;
    int round;
  };
  std::vector<Job> jobs;
  for (double zd : z_degs)
    for (int r = 1; r <= rounds; ++r) jobs.push_back({zd, r});
  std::vector<std::vector<std::array<double, 2>>> rows(jobs.size());
  parallel_for(ctx.jobs, jobs.size(), [&](std::size_t j) {
    const PureState seed = nme(jobs[j].z_deg * kDegToRad);
    // The EB outputs grow to eight parties; scan every cut unless overridden.
    const CutPolicy policy = ctx.policy_override.value_or(CutPolicy::All);
    for (double lambda : lambda_grid(step)) {
      const WeakPovm povm(lambda);
      rows[j].push_back({lambda, eb_ggm_value(seed, jobs[j].round, povm, 1, policy)});
    }
  });
  for (std::size_t j = 0; j < jobs.size(); ++j)
    for (const auto& r : rows[j])
      push_row(table, ctx, {fmt(jobs[j].z_deg), fmt(jobs[j].round), fmt(r[0]), fmt(r[1])});
  return {table};
}

std::vector<ResultTable> run_fig16(const Ctx& ctx) {
  const int samples = ctx.params.get_int("samples");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");
  std::vector<SampleResult> results(samples);
  parallel_for(ctx.jobs, samples, [&](std::size_t i) {
    Rng rng(derive_seed(ctx.seed, i));
    const PureState seed = haar_pure(2, rng);
    SampleResult& s = results[i];
    s.e_in = entanglement_entropy(seed);
    const SearchSpec spec1 = sweep_spec(2, step, starts);
    const auto r1 =
        pb_critical(seed, 1, spec1, derive_seed(ctx.seed, 2 * i + 1), ctx.policy_for(3));
    s.gc_r1 = r1.value_c;
    const CutPolicy eb_policy = ctx.policy_override.value_or(CutPolicy::All);
    const auto re =
        eb_critical(seed, 1, sweep_spec(0, step, 1), derive_seed(ctx.seed, 2 * i + 2), eb_policy);
    s.gc_eb = re.value_c;
    s.lc_eb = re.lambda_c;
  });
  ResultTable per_sample =
      make_table(ctx, "pb_vs_eb_samples", {"sample", "e_in", "gc_pb", "gc_eb", "pb_wins"});
  int pb_wins = 0;
  for (int i = 0; i < samples; ++i) {
    const bool win = results[i].gc_eb < results[i].gc_r1;
    pb_wins += win;
    push_row(per_sample, ctx,
             {fmt(i), fmt(results[i].e_in), fmt(results[i].gc_r1), fmt(results[i].gc_eb),
              win ? "1" : "0"});
  }
  ResultTable summary = make_table(ctx, "pb_vs_eb_summary", {"samples", "pb_better_fraction"});
  push_row(summary, ctx, {fmt(samples), fmt(static_cast<double>(pb_wins) / samples)});
  return {per_sample, summary};
}

std::vector<ResultTable> run_fig17_18(const Ctx& ctx) {
  const std::vector<double> p_list = ctx.params.get_list("p_list");
  const double p_min = ctx.params.get_double("p_min");
  const double p_max = ctx.params.get_double("p_max");
  const double p_step = ctx.params.get_double("p_step");
  const double step = ctx.params.get_double("lambda_step");
  const int starts = ctx.params.get_int("starts");

  ResultTable curves = make_table(ctx, "eb_delta_vs_lambda", {"round", "p", "lambda", "delta_n"});
  struct CurveJob {
    double p;
    int round;
  };
  std::vector<CurveJob> cjobs;
  for (double p : p_list)
    for (int r = 1; r <= 2; ++r) cjobs.push_back({p, r});
  std::vector<std::vector<std::array<double, 2>>> crows(cjobs.size());
  parallel_for(ctx.jobs, cjobs.size(), [&](std::size_t j) {
    const MixedState seed = werner(cjobs[j].p);
    for (double lambda : lambda_grid(step)) {
      const WeakPovm povm(lambda);
      crows[j].push_back({lambda, werner_eb_monogamy_value(seed, cjobs[j].round, povm, 1)});
    }
  });
  for (std::size_t j = 0; j < cjobs.size(); ++j)
    for (const auto& r : crows[j])
      push_row(curves, ctx, {fmt(cjobs[j].round), fmt(cjobs[j].p), fmt(r[0]), fmt(r[1])});

  // Four-party comparison: EB after one round against PB after two.
  ResultTable critical =
      make_table(ctx, "critical_vs_p_4party", {"scheme", "p", "delta_nc", "lambda_c"});
  std::vector<double> ps;
  for (double p = p_min; p <= p_max + 1e-9; p += p_step) ps.push_back(std::min(p, p_max));
  std::vector<std::array<double, 2>> eb_res(ps.size()), pb_res(ps.size());
  parallel_for(ctx.jobs, ps.size(), [&](std::size_t j) {
    const MixedState seed = werner(ps[j]);
    ObjectiveFamily family = [seed](double lambda) -> AuxObjective {
      WeakPovm povm(lambda);
      return [seed, povm = std::move(povm)](std::span<const double>) {
        return werner_eb_monogamy_value(seed, 1, povm, 1);
      };
    };
    const auto re = critical_point(family, sweep_spec(0, step, 1), derive_seed(ctx.seed, j));
    eb_res[j] = {re.value_c, re.lambda_c};
    const auto rp =
        maximize_monogamy(ps[j], 2, sweep_spec(4, step, starts), derive_seed(ctx.seed, 5000 + j));
    pb_res[j] = {rp.value_c, rp.lambda_c};
  });
  for (std::size_t j = 0; j < ps.size(); ++j) {
    push_row(critical, ctx, {"eb", fmt(ps[j]), fmt(eb_res[j][0]), fmt(eb_res[j][1])});
    push_row(critical, ctx, {"pb", fmt(ps[j]), fmt(pb_res[j][0]), fmt(pb_res[j][1])});
  }
  return {curves, critical};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back({{"fig3-ggm-vs-lambda",
                  "Max-over-aux GGM vs sharpness for the |phi+> seed, rounds 1..n",
                  "< 2 min",
                  {{"rounds", "3", "number of PB rounds"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "8", "multi-start count"}}},
                 run_fig3});
    e.push_back({{"fig4-critical-vs-z",
                  "Critical sharpness and GGM vs the NME angle z, with the closed forms",
                  "< 2 min",
                  {{"z_deg_min", "2", "first z (degrees)"},
                   {"z_deg_max", "45", "last z (degrees)"},
                   {"z_deg_step", "1", "z step (degrees)"},
                   {"lambda_step", "0.005", "lambda grid step"},
                   {"starts", "6", "multi-start count"}}},
                 run_fig4});
    e.push_back({{"fig5-logneg",
                  "Log-negativity left between the first two parties after each round",
                  "< 3 min",
                  {{"z", "0.5", "NME angle (radians)"},
                   {"rounds", "3", "number of PB rounds"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "6", "multi-start count"}}},
                 run_fig5});
    e.push_back({{"fig6-ggm-vs-ein",
                  "GGM vs initial entanglement of the NME seed at fixed sharpness",
                  "< 2 min",
                  {{"lambda_list", "0.3,0.5,0.6666666667,0.8", "sharpness values"},
                   {"z_deg_step", "1", "z grid step (degrees)"},
                   {"starts", "6", "multi-start count"}}},
                 run_fig6});
    e.push_back({{"fig7-ggm-vs-round",
                  "Critical GGM vs the number of rounds for several NME angles",
                  "< 10 min",
                  {{"z_deg_list", "45,35,25", "z values (degrees)"},
                   {"rounds_max", "5", "largest round"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "6", "multi-start count"}}},
                 run_fig7});
    e.push_back({{"fig8-haar-hist",
                  "Critical-GGM distribution over Haar two-qubit seeds, rounds 1 and 2",
                  "< 2 min at 1000 samples, < 10 min at 5000",
                  {{"samples", "1000", "ensemble size (paper parity: 5000)"},
                   {"bins", "40", "histogram bins"},
                   {"lambda_step", "0.02", "lambda grid step"},
                   {"starts", "3", "multi-start count"}}},
                 run_fig8});
    e.push_back({{"fig9-10-werner-pb",
                  "Werner-seed PB monogamy-score curves and the critical score vs noise",
                  "< 5 min",
                  {{"p_list", "0.7,0.8,0.9,1.0", "noise values for the lambda curves"},
                   {"p_min", "0.35", "critical sweep start"},
                   {"p_max", "1.0", "critical sweep end"},
                   {"p_step", "0.01", "critical sweep step"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "4", "multi-start count"}}},
                 run_fig9_10});
    e.push_back({{"fig11-ghz-vs-w",
                  "GHZ vs W seeds: GGM curves and critical points, rounds 1 and 2",
                  "< 3 min",
                  {{"rounds", "2", "number of PB rounds"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "6", "multi-start count"}}},
                 run_fig11});
    e.push_back({{"fig12-class-hist",
                  "Critical-GGM distribution over GHZ-class and W-class seeds",
                  "< 3 min at 1000 samples, < 15 min at 5000",
                  {{"samples", "1000", "ensemble size per class (paper parity: 5000)"},
                   {"bins", "40", "histogram bins"},
                   {"lambda_step", "0.02", "lambda grid step"},
                   {"starts", "3", "multi-start count"}}},
                 run_fig12});
    e.push_back({{"fig13-scatter",
                  "Critical GGM vs input GGM: class samples against the gGHZ reference",
                  "< 3 min at 1000 samples, < 15 min at 5000",
                  {{"samples", "1000", "samples per class (paper parity: 5000)"},
                   {"z_points", "45", "gGHZ reference grid size"},
                   {"lambda_step", "0.02", "lambda grid step"},
                   {"starts", "3", "multi-start count"}}},
                 run_fig13});
    e.push_back({{"fig15-eb-nme",
                  "EB scheme: GGM vs sharpness for NME seeds, rounds 1..n",
                  "< 2 min",
                  {{"z_deg_list", "45,30,20", "z values (degrees)"},
                   {"rounds", "3", "number of EB rounds"},
                   {"lambda_step", "0.01", "lambda grid step"}}},
                 run_fig15});
    e.push_back({{"fig16-pb-vs-eb",
                  "PB vs EB critical GGM over Haar two-qubit seeds",
                  "< 2 min at 1000 samples, < 10 min at 5000",
                  {{"samples", "1000", "ensemble size (paper parity: 5000)"},
                   {"lambda_step", "0.02", "lambda grid step"},
                   {"starts", "3", "multi-start count"}}},
                 run_fig16});
    e.push_back({{"fig17-18-werner-eb",
                  "Werner-seed EB monogamy curves and the four-party EB vs PB comparison",
                  "< 5 min",
                  {{"p_list", "0.75,0.85,0.95", "noise values for the lambda curves"},
                   {"p_min", "0.35", "critical sweep start"},
                   {"p_max", "1.0", "critical sweep end"},
                   {"p_step", "0.01", "critical sweep step"},
                   {"lambda_step", "0.01", "lambda grid step"},
                   {"starts", "4", "multi-start count"}}},
                 run_fig17_18});
    return e;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const Entry& e : registry())
    if (e.info.id == id) return e;
  throw std::invalid_argument("unknown experiment id '" + id + "'");
}

void write_csv(const std::filesystem::path& file, const ResultTable& table, const std::string& id,
               std::uint64_t seed) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << "# qinflate " << kVersion << " experiment=" << id << " seed=" << seed
      << " manifest=manifest.json\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << row[c] << (c + 1 < row.size() ? "," : "\n");
  }
  if (!out) throw std::runtime_error("failed while writing " + file.string());
}

std::string policy_name(const std::optional<CutPolicy>& policy) {
  if (!policy) return "default";
  return *policy == CutPolicy::All ? "all" : "reduced";
}

}  // namespace

std::vector<ExperimentInfo> list_experiments(const std::string& filter) {
  std::vector<ExperimentInfo> out;
  for (const Entry& e : registry())
    if (filter.empty() || e.info.id.find(filter) != std::string::npos) out.push_back(e.info);
  return out;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot hash " + file.string());
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ull;
    }
    if (!in) break;
  }
  return hash;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const Entry& entry = find_entry(config.id);
  const Params params(entry.info.params, config.overrides);
  if (config.out_dir.empty())
    throw std::invalid_argument("run_experiment: output directory required");

  namespace fs = std::filesystem;
  const bool created_dir = fs::create_directories(config.out_dir);
  const fs::path manifest_path = config.out_dir / "manifest.json";

  nlohmann::json manifest;
  manifest["experiment"] = config.id;
  manifest["version"] = kVersion;
  manifest["seed"] = config.seed;
  manifest["jobs"] = config.jobs;
  manifest["cut_policy"] = policy_name(config.cut_policy);
  manifest["params"] = params.values();
  manifest["status"] = "running";
  manifest["started_at_unix"] = std::chrono::duration_cast<std::chrono::seconds>(
                                    std::chrono::system_clock::now().time_since_epoch())
                                    .count();

  auto write_manifest = [&] {
    const fs::path tmp = manifest_path.string() + ".tmp";
    std::ofstream out(tmp);
    out << manifest.dump(2) << "\n";
    out.close();
    fs::rename(tmp, manifest_path);
  };
  write_manifest();

  std::vector<fs::path> written;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    Ctx ctx{params, config.seed, std::max(1, config.jobs), config.cut_policy, config.id};
    ExperimentResult result;
    result.tables = entry.run(ctx);
    result.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::json tables = nlohmann::json::array();
    for (const ResultTable& table : result.tables) {
      const fs::path file = config.out_dir / (table.name + ".csv");
      write_csv(file, table, config.id, config.seed);
      written.push_back(file);
      char hash[24];
      std::snprintf(hash, sizeof hash, "%016llx",
                    static_cast<unsigned long long>(fnv1a64_file(file)));
      tables.push_back({{"file", file.filename().string()},
                        {"rows", table.rows.size()},
                        {"fnv1a64", hash}});
    }
    manifest["tables"] = tables;
    manifest["wall_time_sec"] = result.wall_time_sec;
    manifest["status"] = "complete";
    write_manifest();
    return result;
  } catch (...) {
    // Leave no partial outputs behind.
    for (const fs::path& f : written) fs::remove(f);
    std::error_code ec;
    fs::remove(manifest_path, ec);
    if (created_dir) fs::remove(config.out_dir, ec);
    throw;
  }
}

ResultTable read_result_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  ResultTable table;
  table.name = file.stem().string();
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_done) {
      table.columns = std::move(cells);
      header_done = true;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace qinflate
