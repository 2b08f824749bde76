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
 * @file verify.hpp
 * @brief The acceptance checklist: every expected value the build must
 *        reproduce, each with its pinned tolerance, runnable from the CLI
 *        (`qinflate verify`) and from the acceptance test binary.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qinflate {

/// Quick runs the ensembles at 1000 samples with the correspondingly widened
/// tolerances; Full uses the 5000-sample parity settings.
enum class Suite { Quick, Full };

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing check, or a check count when green
  double seconds = 0.0;
};

struct AcceptanceOptions {
  Suite suite = Suite::Full;
  int jobs = 1;
  double tolerance_scale = 1.0;   // diagnostic knob; scales every tolerance
  std::vector<std::string> only;  // substring filters on criterion names
  std::uint64_t seed = 20260809;
};

/// List of criterion names in execution order (for help text and filters).
std::vector<std::string> acceptance_criteria();

/// Run the selected criteria; progress lines go to `progress` when non-null.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress);

}  // namespace qinflate
