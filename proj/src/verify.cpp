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

#include "qinflate/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "qinflate/optsearch.hpp"
#include "qinflate/parallel.hpp"

namespace qinflate {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kThird2 = 2.0 / 3.0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Collects scaled-tolerance checks; a criterion passes when none failed.
class Checker {
 public:
  explicit Checker(double scale) : scale_(scale) {}

  void near(const std::string& what, double actual, double expected, double tol) {
    ++checks_;
    if (!(std::abs(actual - expected) <= tol * scale_))
      fail(what + ": got " + num(actual) + ", want " + num(expected) + " +- " + num(tol * scale_));
  }

  void below(const std::string& what, double actual, double bound) {
    ++checks_;
    if (!(actual < bound * scale_))
      fail(what + ": got " + num(actual) + ", want < " + num(bound * scale_));
  }

  void above(const std::string& what, double actual, double bound) {
    ++checks_;
    if (!(actual > bound)) fail(what + ": got " + num(actual) + ", want > " + num(bound));
  }

  void is_true(const std::string& what, bool condition) {
    ++checks_;
    if (!condition) fail(what);
  }

  bool ok() const { return failures_.empty(); }

  std::string detail() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string d = failures_.front();
    if (failures_.size() > 1)
      d += " (+" + std::to_string(failures_.size() - 1) + " more failures)";
    return d;
  }

 private:
  void fail(std::string message) {
    if (failures_.size() < 8) failures_.push_back(std::move(message));
    else ++checks_;  // keep counting, stop recording
  }

  double scale_;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

SearchSpec make_spec(int aux_dim, double lambda_step, int starts) {
  SearchSpec spec;
  spec.aux_dimension = aux_dim;
  spec.lambda_step = lambda_step;
  spec.starts = starts;
  return spec;
}

double overlap(const PureState& a, const PureState& b) {
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

AuxQubit random_aux(Rng& rng) {
  return AuxQubit{rng.uniform() * kPi, rng.uniform() * 2.0 * kPi};
}

// Shared ensemble products, computed lazily per run.
struct HaarRow {
  double e_in, gc1, gc2, gc_eb;
};

struct ClassRow {
  double ggm_in, gc;
};

struct Context {
  const AcceptanceOptions& options;
  int samples;  // ensemble size for this suite

  std::vector<HaarRow> haar;
  std::vector<ClassRow> ghz_class, w_class;
  bool haar_done = false, class_done = false;

  void ensure_haar() {
    if (haar_done) return;
    haar.resize(samples);
    const std::uint64_t seed = options.seed;
    parallel_for(options.jobs, haar.size(), [&](std::size_t i) {
      Rng rng(derive_seed(seed, i));
      const PureState state = haar_pure(2, rng);
      HaarRow& row = haar[i];
      row.e_in = entanglement_entropy(state);
      const auto r1 = critical_point(pb_ggm_family(state, 1, CutPolicy::All),
                                     make_spec(2, 0.02, 3), derive_seed(seed, 3 * i + 1));
      const auto r2 = critical_point(pb_ggm_family(state, 2, CutPolicy::All),
                                     make_spec(4, 0.02, 3), derive_seed(seed, 3 * i + 2));
      const auto re = critical_point(eb_ggm_family(state, 1, CutPolicy::All),
                                     make_spec(0, 0.02, 1), derive_seed(seed, 3 * i + 3));
      row.gc1 = r1.value_c;
      row.gc2 = r2.value_c;
      row.gc_eb = re.value_c;
    });
    haar_done = true;
  }

  void ensure_classes() {
    if (class_done) return;
    ghz_class.resize(samples);
    w_class.resize(samples);
    for (const bool is_ghz : {true, false}) {
      auto& rows = is_ghz ? ghz_class : w_class;
      const std::uint64_t seed = options.seed ^ (is_ghz ? 0x67686373ull : 0x77636c73ull);
      parallel_for(options.jobs, rows.size(), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const PureState state = is_ghz ? ghz_class_random(rng) : w_class_random(rng);
        const auto r = critical_point(pb_ggm_family(state, 1, CutPolicy::All),
                                      make_spec(2, 0.02, 3), derive_seed(seed, 90000 + i));
        rows[i] = {ggm(state).value, r.value_c};
      });
    }
    class_done = true;
  }
};

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
// Criteria

void crit_pb_maxent_critical(Context& ctx, Checker& check) {
  const PureState seed = phi_plus();
  const auto r = critical_point(pb_ggm_family(seed, 1, CutPolicy::All), make_spec(2, 0.005, 4),
                                ctx.options.seed);
  check.near("lambda_c", r.lambda_c, kThird2, 0.005);
  check.near("ggm_c", r.value_c, 1.0 / 6.0, 0.002);
  for (int i = 1; i <= 50; ++i) {
    const double lambda = i / 50.0;
    const WeakPovm povm(lambda);
    const double angles[2] = {0.0, 0.0};
    const double simulated = pb_ggm_value(seed, 1, povm, angles, 1, CutPolicy::All);
    check.near("analytic curve @" + num(lambda), simulated, analytic_ggm_curve_maxent(lambda),
               1e-6);
  }
}

void crit_outcome_probabilities(Context& ctx, Checker& check) {
  Rng rng(ctx.options.seed ^ 0x9069ull);
  for (int rep = 0; rep < 4; ++rep) {
    const WeakPovm povm(rng.uniform());
    const PureState grown = tensor(phi_plus(), aux_state(random_aux(rng)));
    const auto probs = outcome_distribution(grown, {2, 3}, povm);
    for (int k = 0; k < 4; ++k)
      check.near("round-1 p_" + std::to_string(k + 1), probs[k], 0.25, 1e-12);
  }
  for (int rep = 0; rep < 20; ++rep) {
    const double lambda = 0.05 + 0.9 * rng.uniform();
    const AuxQubit a1 = random_aux(rng);
    const AuxQubit a2 = random_aux(rng);
    ProtocolConfig config{Scheme::PB, phi_plus(), 2, lambda, {a1, a2}, {{1}, false, 0}, false};
    const RunTrajectory traj = run(config);
    const double cross = std::sqrt((1.0 - lambda) * (1.0 + 3.0 * lambda));
    const double closed =
        (1.0 / traj.rounds[0].probability) * (1.0 / 64.0) *
        (4.0 - 2.0 * lambda * (1.0 - lambda + cross) *
                   (std::cos(a1.theta) * std::cos(a2.theta) -
                    std::cos(a1.phi - a2.phi) * std::sin(a1.theta) * std::sin(a2.theta)));
    check.near("p_1^2 closed form @lambda=" + num(lambda), traj.rounds[1].probability, closed,
               1e-10);
    check.near("chained probability", chained_probability(traj),
               traj.rounds[0].probability * traj.rounds[1].probability, 1e-15);
  }
}

void crit_recursion_oracle(Context& ctx, Checker& check) {
  Rng rng(ctx.options.seed ^ 0xACE5ull);
  const std::vector<double> lambdas{0.1, 0.5, kThird2, 0.9};
  const std::vector<std::vector<int>> seqs1{{1}, {2}, {3}, {4}};
  const std::vector<std::vector<int>> seqs2{{1, 1}, {2, 3}};
  const std::vector<std::vector<int>> seqs3{{1, 1, 1}, {3, 1, 4}, {4, 2, 1}};

  struct Family {
    const char* name;
    PbSeedFamily family;
    PureState seed;
  };
  Rng sampler(ctx.options.seed ^ 0xFA111ull);
  std::vector<Family> families;
  families.push_back({"maxent", PbSeedFamily::MaxEntangled, phi_plus()});
  families.push_back({"nme", PbSeedFamily::Nme, nme(0.5)});
  families.push_back({"haar2", PbSeedFamily::Haar2, haar_pure(2, sampler)});
  families.push_back({"w", PbSeedFamily::W, w_state()});
  families.push_back({"ghz-class", PbSeedFamily::GhzClass, ghz_class_random(sampler)});
  families.push_back({"w-class", PbSeedFamily::WClass, w_class_random(sampler)});

  for (const Family& f : families) {
    for (double lambda : lambdas) {
      const WeakPovm povm(lambda);
      for (const auto* seqs : {&seqs1, &seqs2, &seqs3}) {
        for (const auto& seq : *seqs) {
          std::vector<AuxQubit> aux;
          for (std::size_t r = 0; r < seq.size(); ++r) aux.push_back(random_aux(rng));
          PureState direct = f.seed;
          bool dead_branch = false;
          for (std::size_t r = 0; r < seq.size(); ++r) {
            auto out = pb_round(direct, aux[r], povm, seq[r]);
            if (!out.has_state()) {
              dead_branch = true;
              break;
            }
            direct = std::move(*out.post_state);
          }
          if (dead_branch) continue;
          const PureState rebuilt = recursion_pb(f.family, f.seed, seq.size(), lambda, aux, seq);
          check.near(std::string("pb ") + f.name + " rounds=" + std::to_string(seq.size()),
                     overlap(rebuilt, direct), 1.0, 1e-10);
        }
      }
    }
  }

  struct EbFamily {
    const char* name;
    EbSeedFamily family;
    PureState seed;
  };
  std::vector<EbFamily> eb_families;
  eb_families.push_back({"maxent", EbSeedFamily::MaxEntangled, phi_plus()});
  eb_families.push_back({"nme", EbSeedFamily::Nme, nme(0.5)});
  const std::vector<std::vector<int>> eb_seqs{{1}, {2}, {3}, {4}, {2, 3}, {4, 1, 2}, {1, 1, 1}};
  for (const EbFamily& f : eb_families) {
    for (double lambda : lambdas) {
      const WeakPovm povm(lambda);
      for (const auto& seq : eb_seqs) {
        PureState direct = f.seed;
        bool dead_branch = false;
        for (int k : seq) {
          auto out = eb_round(direct, f.seed, povm, k);
          if (!out.has_state()) {
            dead_branch = true;
            break;
          }
          direct = std::move(*out.post_state);
        }
        if (dead_branch) continue;
        const PureState rebuilt = recursion_eb(f.family, f.seed, seq.size(), lambda, seq);
        check.near(std::string("eb ") + f.name + " rounds=" + std::to_string(seq.size()),
                   overlap(rebuilt, direct), 1.0, 1e-10);
      }
    }
  }
}

void crit_nme_proposition(Context& ctx, Checker& check) {
  for (int z_deg = 10; z_deg <= 45; z_deg += 5) {
    const double z = z_deg * kDegToRad;
    const auto r = critical_point(pb_ggm_family(nme(z), 1, CutPolicy::All),
                                  make_spec(2, 0.005, 4), derive_seed(ctx.options.seed, z_deg));
    check.near("lambda_c @z=" + std::to_string(z_deg) + "deg", r.lambda_c,
               analytic_lambda_c_nme(z), 5e-3);
    const double gc = analytic_ggm_c_nme(z);
    if (z_deg < 45)
      check.above("gc(z) above maximally entangled @z=" + std::to_string(z_deg) + "deg", gc,
                  1.0 / 6.0);
    else
      check.near("gc(45deg) equals maximally entangled", gc, 1.0 / 6.0, 1e-9);
  }
}

void crit_wclass_structure(Context& ctx, Checker& check) {
  Rng rng(ctx.options.seed ^ 0x7C1A55ull);
  for (int i = 0; i < 200; ++i) {
    const PureState seed = haar_pure(2, rng);
    const double lambda = 0.05 + 0.9 * rng.uniform();
    const WeakPovm povm(lambda);
    const int k = 1 + static_cast<int>(rng.uniform() * 4.0);
    auto out = pb_round(seed, random_aux(rng), povm, std::min(k, 4));
    if (!out.has_state()) continue;
    check.below("tangle of round-1 output #" + std::to_string(i),
                std::abs(tangle(*out.post_state)), 1e-8);
  }
}

void crit_haar_ensemble(Context& ctx, Checker& check) {
  ctx.ensure_haar();
  std::vector<double> g1, g2;
  for (const HaarRow& row : ctx.haar) {
    g1.push_back(row.gc1);
    g2.push_back(row.gc2);
  }
  const double mean_tol = ctx.options.suite == Suite::Full ? 0.01 : 0.015;
  check.near("mean gc round 1", mean_of(g1), 0.237, mean_tol);
  check.near("mean gc round 2", mean_of(g2), 0.182, mean_tol);
  check.near("stddev gc round 1", stddev_of(g1), 0.02, 0.005);
  check.near("stddev gc round 2", stddev_of(g2), 0.017, 0.005);
}

void crit_werner_pb(Context& ctx, Checker& check) {
  const SearchSpec spec1 = make_spec(2, 0.01, 3);
  const SearchSpec spec2 = make_spec(4, 0.01, 3);

  std::vector<double> ps;
  for (double p = 0.5; p <= 1.0 + 1e-9; p += 0.01) ps.push_back(std::min(p, 1.0));
  std::vector<double> d1(ps.size()), d2(ps.size());
  parallel_for(ctx.options.jobs, ps.size(), [&](std::size_t i) {
    d1[i] = maximize_monogamy(ps[i], 1, spec1, derive_seed(ctx.options.seed, i)).value_c;
    d2[i] = maximize_monogamy(ps[i], 2, spec2, derive_seed(ctx.options.seed, 500 + i)).value_c;
  });
  const auto peak1 = std::max_element(d1.begin(), d1.end()) - d1.begin();
  const auto peak2 = std::max_element(d2.begin(), d2.end()) - d2.begin();
  check.near("round-1 peak noise", ps[peak1], 0.858, 0.02);
  check.near("round-2 peak noise", ps[peak2], 0.75, 0.02);
  for (double p : {0.7, 0.8, 0.9}) {
    const std::size_t i = static_cast<std::size_t>(std::lround((p - 0.5) / 0.01));
    check.is_true("round 2 beats round 1 @p=" + num(p), d2[i] > d1[i]);
  }
  for (double p : {0.2, 1.0 / 3.0}) {
    const auto r = maximize_monogamy(p, 1, spec1, derive_seed(ctx.options.seed, 1000));
    check.near("separable seed score @p=" + num(p), r.value_c, 0.0, 1e-10);
    for (const auto& [lambda, value] : r.curve)
      check.near("separable seed score @p=" + num(p) + " lambda=" + num(lambda), value, 0.0,
                 1e-10);
  }
}

void crit_tripartite_seeds(Context& ctx, Checker& check) {
  const auto w1 = critical_point(pb_ggm_family(w_state(), 1, CutPolicy::All),
                                 make_spec(2, 0.005, 4), ctx.options.seed);
  check.near("W round-1 ggm_c", w1.value_c, 0.168, 0.003);
  check.near("W round-1 lambda_c", w1.lambda_c, 0.693, 0.005);
  const auto w2 = critical_point(pb_ggm_family(w_state(), 2, CutPolicy::All),
                                 make_spec(4, 0.01, 4), ctx.options.seed);
  check.near("W round-2 ggm_c", w2.value_c, 0.138, 0.003);

  const auto g1 = critical_point(pb_ggm_family(ghz(), 1, CutPolicy::All), make_spec(2, 0.005, 4),
                                 ctx.options.seed);
  check.near("GHZ round-1 ggm_c", g1.value_c, 1.0 / 6.0, 0.003);
  check.near("GHZ round-1 lambda_c", g1.lambda_c, kThird2, 0.01);
  const auto g2 = critical_point(pb_ggm_family(ghz(), 2, CutPolicy::All), make_spec(4, 0.01, 4),
                                 ctx.options.seed);
  check.near("GHZ round-2 ggm_c", g2.value_c, 0.128, 0.005);
  check.near("GHZ round-2 lambda_c", g2.lambda_c, kThird2, 0.01);

  // gGHZ(z) inflation tracks NME(z) pointwise in lambda.
  for (double z_deg : {15.0, 30.0}) {
    const double z = z_deg * kDegToRad;
    for (int rounds : {1, 2}) {
      const SearchSpec spec = make_spec(2 * rounds, 0.05, 4);
      std::vector<double> warm_g, warm_n;
      std::size_t idx = 0;
      for (double lambda = 0.05; lambda <= 0.95 + 1e-9; lambda += 0.05, ++idx) {
        const auto rg = max_over_aux(pb_ggm_family(gghz(z), rounds, CutPolicy::All)(lambda), spec,
                                     derive_seed(ctx.options.seed, 10 * idx), warm_g);
        const auto rn = max_over_aux(pb_ggm_family(nme(z), rounds, CutPolicy::All)(lambda), spec,
                                     derive_seed(ctx.options.seed, 10 * idx + 1), warm_n);
        warm_g = rg.angles;
        warm_n = rn.angles;
        check.near("gGHZ~NME @z=" + num(z_deg) + " r=" + std::to_string(rounds) +
                       " lambda=" + num(lambda),
                   rg.value, rn.value, 2e-3);
      }
    }
  }
}

void crit_class_ensembles(Context& ctx, Checker& check) {
  ctx.ensure_classes();
  std::vector<double> g_ghz, g_w;
  for (const ClassRow& r : ctx.ghz_class) g_ghz.push_back(r.gc);
  for (const ClassRow& r : ctx.w_class) g_w.push_back(r.gc);
  const double mean_tol = ctx.options.suite == Suite::Full ? 0.01 : 0.015;
  check.near("GHZ-class mean gc", mean_of(g_ghz), 0.208, mean_tol);
  check.near("GHZ-class stddev", stddev_of(g_ghz), 0.026, 0.005);
  check.near("W-class mean gc", mean_of(g_w), 0.20, mean_tol);
  check.near("W-class stddev", stddev_of(g_w), 0.028, 0.005);

  // gGHZ reference curve over input GGM, then the dominance scan.
  const int grid_n = 181;
  std::vector<std::pair<double, double>> ref(grid_n);  // (ggm_in, gc)
  parallel_for(ctx.options.jobs, grid_n, [&](std::size_t i) {
    const double z = (i + 1.0) / grid_n * kPi / 4.0;
    const auto r = critical_point(pb_ggm_family(gghz(z), 1, CutPolicy::All),
                                  make_spec(2, 0.01, 4), derive_seed(ctx.options.seed, 7700 + i));
    const double s = std::sin(z);
    ref[i] = {s * s, r.value_c};
  });
  auto gghz_gc_at = [&](double ggm_in) {
    if (ggm_in <= ref.front().first)
      return ref.front().second * (ggm_in / ref.front().first);
    if (ggm_in >= ref.back().first) return ref.back().second;
    auto it = std::lower_bound(ref.begin(), ref.end(), std::make_pair(ggm_in, -1.0));
    const auto [x1, y1] = *(it - 1);
    const auto [x2, y2] = *it;
    return y1 + (y2 - y1) * (ggm_in - x1) / (x2 - x1);
  };
  int violations = 0;
  double worst = 0.0;
  for (const auto* rows : {&ctx.ghz_class, &ctx.w_class}) {
    for (const ClassRow& r : *rows) {
      const double bound = gghz_gc_at(r.ggm_in);
      const double gap = r.gc - bound;
      if (gap > 2e-3 * ctx.options.tolerance_scale) {
        ++violations;
        worst = std::max(worst, gap);
      }
    }
  }
  check.is_true("gGHZ dominates every class sample (worst gap " + num(worst) + ")",
                violations == 0);
}

void crit_eb_scheme(Context& ctx, Checker& check) {
  const PureState seed = phi_plus();
  const auto r1 = critical_point(eb_ggm_family(seed, 1, CutPolicy::All), make_spec(0, 0.005, 1),
                                 ctx.options.seed);
  check.near("EB round-1 ggm_c", r1.value_c, 0.25, 0.003);

  Rng rng(ctx.options.seed ^ 0xEBEBull);
  for (int rep = 0; rep < 10; ++rep) {
    const double lambda = rng.uniform();
    const WeakPovm povm(lambda);
    auto out = eb_round(seed, seed, povm, 1);
    const MixedState m23 = reduced_density(*out.post_state, {2, 3});
    const MixedState m12 = reduced_density(*out.post_state, {1, 2});
    const auto analytic = analytic_eb_eigs_maxent(lambda);
    check.near("e_A2A3 @lambda=" + num(lambda), hermitian_eigenvalues(m23.matrix()).front(),
               analytic.e_a2a3, 1e-8);
    check.near("e_A1A2 @lambda=" + num(lambda), hermitian_eigenvalues(m12.matrix()).front(),
               analytic.e_a1a2, 1e-8);
  }

  std::vector<double> grid;
  for (double l = 0.0; l <= 1.0 + 1e-9; l += 0.02) grid.push_back(std::min(l, 1.0));
  std::vector<double> g2(grid.size()), g3(grid.size());
  parallel_for(ctx.options.jobs, grid.size(), [&](std::size_t i) {
    const WeakPovm povm(grid[i]);
    g2[i] = eb_ggm_value(seed, 2, povm, 1, CutPolicy::All);
    g3[i] = eb_ggm_value(seed, 3, povm, 1, CutPolicy::All);
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    check.near("rounds 2-3 agree @lambda=" + num(grid[i]), g2[i], g3[i], 1e-6);

  ctx.ensure_haar();
  int pb_wins = 0;
  for (const HaarRow& row : ctx.haar)
    if (row.gc_eb < row.gc1) ++pb_wins;
  const double fraction = static_cast<double>(pb_wins) / ctx.haar.size();
  const double tol = ctx.options.suite == Suite::Full ? 0.02 : 0.04;
  check.near("PB-better fraction", fraction, 0.5425, tol);
}

void crit_property_suite(Context& ctx, Checker& check) {
  // POVM completeness and root consistency across the sharpness range.
  for (double lambda = 0.0; lambda <= 1.0 + 1e-12; lambda += 0.1) {
    const WeakPovm povm(lambda);
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int k = 1; k <= 4; ++k) {
      sum += povm.element(k);
      check.below("root consistency @lambda=" + num(lambda),
                  (povm.root(k) * povm.root(k) - povm.element(k)).cwiseAbs().maxCoeff(), 1e-12);
    }
    check.below("completeness @lambda=" + num(lambda),
                (sum - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }

  Rng rng(ctx.options.seed ^ 0x11AAull);
  auto random_pure = [&](int parties) {
    Vector v(Eigen::Index(1) << parties);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
    v /= v.norm();
    return PureState(std::move(v));
  };
  auto random_mixed = [&](int parties) {
    const Eigen::Index d = Eigen::Index(1) << parties;
    Matrix m = Matrix::Zero(d, d);
    for (int term = 0; term < 3; ++term) {
      const PureState psi = random_pure(parties);
      m += (term + 1.0) * (psi.amplitudes() * psi.amplitudes().adjoint());
    }
    m /= m.trace().real();
    m = (m + m.adjoint().eval()) / 2.0;
    return MixedState(std::move(m));
  };

  // Probability normalization over random registers, both kinds.
  for (int parties = 3; parties <= 6; ++parties) {
    const WeakPovm povm(rng.uniform());
    const int q = 1 + static_cast<int>(rng.uniform() * (parties - 1));
    const std::pair<int, int> pair{q, q == parties ? 1 : q + 1};
    const auto probs_pure = outcome_distribution(random_pure(parties), pair, povm);
    check.near("pure probabilities sum, n=" + std::to_string(parties),
               probs_pure[0] + probs_pure[1] + probs_pure[2] + probs_pure[3], 1.0, 1e-12);
    if (parties <= 5) {
      const auto probs_mixed = outcome_distribution(random_mixed(parties), pair, povm);
      check.near("mixed probabilities sum, n=" + std::to_string(parties),
                 probs_mixed[0] + probs_mixed[1] + probs_mixed[2] + probs_mixed[3], 1.0, 1e-12);
    }
  }

  // Schmidt symmetry: both sides of any cut share their reduced spectrum.
  for (int rep = 0; rep < 4; ++rep) {
    const int parties = 4 + rep % 2;
    const PureState psi = random_pure(parties);
    const Bipartition cut({1, 2}, parties);
    const auto ea = hermitian_eigenvalues(reduced_density(psi, cut.side_a()).matrix());
    const auto eb = hermitian_eigenvalues(reduced_density(psi, cut.side_b()).matrix());
    double suma = 0.0;
    for (double e : ea) suma += e;
    check.near("reduced spectrum sums to one", suma, 1.0, 1e-10);
    const std::size_t shared = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < shared; ++i)
      check.near("Schmidt symmetry", ea[i], eb[i], 1e-10);
  }

  // partial_trace undoes tensor.
  {
    const MixedState left = random_mixed(2);
    const MixedState right = random_mixed(1);
    const MixedState back = partial_trace(tensor(left, right), {1, 2});
    check.below("partial_trace after tensor",
                (back.matrix() - left.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }

  // Negativity two ways: partial transpose vs Schmidt coefficients.
  for (int rep = 0; rep < 4; ++rep) {
    const PureState psi = random_pure(4);
    const Bipartition cut(rep % 2 == 0 ? std::vector<int>{1} : std::vector<int>{1, 3}, 4);
    const double via_pt = negativity(to_mixed(psi), cut);
    const auto spectrum = hermitian_eigenvalues(reduced_density(psi, cut.side_a()).matrix());
    double root_sum = 0.0;
    for (double e : spectrum) root_sum += std::sqrt(std::max(0.0, e));
    check.near("negativity via Schmidt route", via_pt, (root_sum * root_sum - 1.0) / 2.0, 1e-10);
  }

  // GGM is invariant under local unitaries.
  for (int rep = 0; rep < 3; ++rep) {
    const PureState psi = random_pure(3);
    const double before = ggm(psi, CutPolicy::All).value;
    Vector rotated = psi.amplitudes();
    for (int party = 1; party <= 3; ++party) {
      const double u = rng.uniform() * kPi, v = rng.uniform() * 2 * kPi,
                   w = rng.uniform() * 2 * kPi;
      Eigen::Matrix2cd unitary;
      unitary << std::polar(std::cos(u), v), std::polar(std::sin(u), w),
          -std::polar(std::sin(u), -w), std::polar(std::cos(u), -v);
      Vector next(rotated.size());
      const int bit = 3 - party;
      for (Eigen::Index idx = 0; idx < next.size(); ++idx) {
        const Eigen::Index base = idx & ~(Eigen::Index(1) << bit);
        const int b = (idx >> bit) & 1;
        next(idx) = unitary(b, 0) * rotated(base) + unitary(b, 1) * rotated(base | (Eigen::Index(1) << bit));
      }
      rotated = next;
    }
    const double after = ggm(PureState(rotated / rotated.norm()), CutPolicy::All).value;
    check.near("GGM local-unitary invariance", after, before, 1e-10);
  }

  // Optimizer determinism: identical spec and seed, identical result.
  const auto a = critical_point(pb_ggm_family(nme(0.4), 1, CutPolicy::All), make_spec(2, 0.05, 3),
                                ctx.options.seed);
  const auto b = critical_point(pb_ggm_family(nme(0.4), 1, CutPolicy::All), make_spec(2, 0.05, 3),
                                ctx.options.seed);
  check.is_true("optimizer determinism",
                a.lambda_c == b.lambda_c && a.value_c == b.value_c && a.aux_opt == b.aux_opt);
}

struct Criterion {
  const char* name;
  void (*fn)(Context&, Checker&);
};

const Criterion kCriteria[] = {
    {"criterion-01-pb-maxent-critical", crit_pb_maxent_critical},
    {"criterion-02-outcome-probabilities", crit_outcome_probabilities},
    {"criterion-03-recursion-oracle", crit_recursion_oracle},
    {"criterion-04-nme-proposition", crit_nme_proposition},
    {"criterion-05-wclass-structure", crit_wclass_structure},
    {"criterion-06-haar-ensemble", crit_haar_ensemble},
    {"criterion-07-werner-pb", crit_werner_pb},
    {"criterion-08-tripartite-seeds", crit_tripartite_seeds},
    {"criterion-09-class-ensembles", crit_class_ensembles},
    {"criterion-10-eb-scheme", crit_eb_scheme},
    {"criterion-11-property-suite", crit_property_suite},
};

}  // namespace

std::vector<std::string> acceptance_criteria() {
  std::vector<std::string> names;
  for (const Criterion& c : kCriteria) names.push_back(c.name);
  return names;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress) {
  Context ctx{options, options.suite == Suite::Full ? 5000 : 1000, {}, {}, {}, false, false};
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : kCriteria) {
    if (!options.only.empty()) {
      bool wanted = false;
      for (const std::string& filter : options.only)
        if (std::string(criterion.name).find(filter) != std::string::npos) wanted = true;
      if (!wanted) continue;
    }
    if (progress) *progress << "[ RUN  ] " << criterion.name << "\n" << std::flush;
    Checker check(options.tolerance_scale);
    const auto t0 = std::chrono::steady_clock::now();
    criterion.fn(ctx, check);
    CriterionResult result;
    result.name = criterion.name;
    result.passed = check.ok();
    result.detail = check.detail();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress)
      *progress << (result.passed ? "[ PASS ] " : "[ FAIL ] ") << result.name << " ("
                << result.detail << ", " << num(result.seconds) << " s)\n"
                << std::flush;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace qinflate
