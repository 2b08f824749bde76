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

#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qinflate/experiments.hpp"
#include "qinflate/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_list(const std::string& filter, bool verbose) {
  for (const auto& info : qinflate::list_experiments(filter)) {
    std::cout << info.id << "  -  " << info.summary << "  [" << info.budget << "]\n";
    if (verbose) {
      for (const auto& p : info.params)
        std::cout << "    --set " << p.key << "=" << p.default_value << "  (" << p.help << ")\n";
    }
  }
  return kExitOk;
}

int cmd_run(const std::string& id, const std::vector<std::string>& sets, std::uint64_t seed,
            std::string out_dir, const std::string& cut_policy, int jobs) {
  qinflate::ExperimentConfig config;
  config.id = id;
  config.seed = seed;
  config.jobs = jobs;
  for (const std::string& kv : sets) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos || pos == 0) {
      std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
      return kExitUsage;
    }
    config.overrides[kv.substr(0, pos)] = kv.substr(pos + 1);
  }
  if (out_dir.empty()) {
    if (const char* env = std::getenv(qinflate::kOutputDirEnv)) out_dir = env;
  }
  if (out_dir.empty()) {
    std::cerr << "error: no output directory; pass --out or set " << qinflate::kOutputDirEnv
              << "\n";
    return kExitUsage;
  }
  config.out_dir = std::filesystem::path(out_dir) / id;
  if (cut_policy == "all") config.cut_policy = qinflate::CutPolicy::All;
  else if (cut_policy == "reduced") config.cut_policy = qinflate::CutPolicy::Reduced;

  try {
    const auto result = qinflate::run_experiment(config);
    std::cout << "wrote " << result.tables.size() << " table(s) to " << config.out_dir.string()
              << " in " << result.wall_time_sec << " s\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const std::string& suite, int jobs, const std::vector<std::string>& only,
               std::uint64_t seed, double tolerance_scale) {
  qinflate::AcceptanceOptions options;
  options.suite = suite == "full" ? qinflate::Suite::Full : qinflate::Suite::Quick;
  options.jobs = jobs;
  options.only = only;
  options.seed = seed;
  options.tolerance_scale = tolerance_scale;
  const auto results = qinflate::run_acceptance(options, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"measurement-based multipartite entanglement inflation toolkit"};
  app.require_subcommand(1);

  std::string filter;
  bool verbose = false;
  auto* list = app.add_subcommand("list", "list the experiment registry");
  list->add_option("filter", filter, "only ids containing this substring");
  list->add_flag("--verbose,-v", verbose, "also print per-experiment parameters");

  std::string run_id;
  std::vector<std::string> sets;
  std::uint64_t run_seed = 1;
  std::string out_dir;
  std::string cut_policy = "default";
  int run_jobs = default_jobs();
  auto* run = app.add_subcommand("run", "run one experiment and write CSV + manifest");
  run->add_option("id", run_id, "experiment id (see `list`)")->required();
  run->add_option("--set", sets, "override a parameter, key=value; repeatable");
  run->add_option("--seed", run_seed, "master RNG seed");
  run->add_option("--out", out_dir, "output directory root");
  run->add_option("--jobs", run_jobs, "worker threads for the outermost sweep");
  run->add_option("--cut-policy", cut_policy, "GGM cut policy: default, all, reduced")
      ->check(CLI::IsMember({"default", "all", "reduced"}));

  std::string suite = "quick";
  int verify_jobs = default_jobs();
  std::vector<std::string> only;
  std::uint64_t verify_seed = 20260809;
  double tolerance_scale = 1.0;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", suite, "quick (1000-sample ensembles) or full (5000)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--only", only, "run only criteria whose name contains this; repeatable");
  verify->add_option("--seed", verify_seed, "master RNG seed");
  verify->add_option("--tolerance-scale", tolerance_scale,
                     "diagnostic multiplier applied to every tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(filter, verbose);
    if (run->parsed()) return cmd_run(run_id, sets, run_seed, out_dir, cut_policy, run_jobs);
    if (verify->parsed())
      return cmd_verify(suite, verify_jobs, only, verify_seed, tolerance_scale);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
