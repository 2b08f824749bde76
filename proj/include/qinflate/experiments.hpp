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
 * @file experiments.hpp
 * @brief Named, seeded, configurable experiment registry.  Each entry
 *        reproduces one figure-level data product as CSV tables plus a JSON
 *        manifest; plotting is left to external tools.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qinflate/entmeasures.hpp"

namespace qinflate {

inline constexpr const char* kVersion = "0.1.0";

/// Environment variable consulted for the default output directory.
inline constexpr const char* kOutputDirEnv = "QINFLATE_OUT_DIR";

struct ExperimentParam {
  std::string key;
  std::string default_value;
  std::string help;
};

struct ExperimentInfo {
  std::string id;
  std::string summary;
  std::string budget;  // documented desk-scale runtime budget
  std::vector<ExperimentParam> params;
};

/// One CSV table: a header row plus stringified cells (doubles are written
/// with 12 significant digits, so parsing a file reproduces the records).
struct ResultTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ExperimentConfig {
  std::string id;
  std::map<std::string, std::string> overrides;  // from repeated --set key=value
  std::uint64_t seed = 1;
  std::filesystem::path out_dir;
  std::optional<CutPolicy> cut_policy;
  int jobs = 1;
};

struct ExperimentResult {
  std::vector<ResultTable> tables;
  double wall_time_sec = 0.0;
};

/// Registry entries whose id contains `filter` (all of them for "").
std::vector<ExperimentInfo> list_experiments(const std::string& filter = "");

/// Run one registry entry and persist its tables plus manifest.json under
/// config.out_dir.  Unknown ids and unknown override keys are rejected before
/// any computation; a failure mid-run removes the files already written.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Parse a CSV emitted by run_experiment back into a table (used by the
/// round-trip tests and by downstream tooling).
ResultTable read_result_csv(const std::filesystem::path& file);

/// FNV-1a 64-bit content hash as recorded in the manifest.
std::uint64_t fnv1a64_file(const std::filesystem::path& file);

}  // namespace qinflate
