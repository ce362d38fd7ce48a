// Copyright 2025-2026 The ovm developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "ovm/instance_io.hpp"
#include "ovm/reports.hpp"

namespace ovm {

/// Batch configuration shared by every scenario. trials = 0 picks the
/// scenario's default size; workers > 1 runs the trial loop on OpenMP with
/// per-trial seeds, so reports are identical to the serial path and ordered
/// by trial index.
struct ScenarioOptions {
  std::uint64_t seed = 42;
  int trials = 0;
  int workers = 1;
  double tol_abs = 1e-9;        // validator tolerance
  double tol_roundtrip = 1e-8;  // composed-pipeline tolerance
};

std::vector<Report> scenario_roundtrip(const ScenarioOptions& options);
std::vector<Report> scenario_multiplicativity(const ScenarioOptions& options);
std::vector<Report> scenario_positivity(const ScenarioOptions& options);
std::vector<Report> scenario_positive_family(const ScenarioOptions& options);
std::vector<Report> scenario_projection_family(const ScenarioOptions& options);
std::vector<Report> scenario_jordan(const ScenarioOptions& options);
std::vector<Report> scenario_semivariation(const ScenarioOptions& options);
std::vector<Report> scenario_convergence(const ScenarioOptions& options);
std::vector<Report> scenario_negative_controls(const ScenarioOptions& options);

/// Every scenario above, concatenated.
std::vector<Report> scenario_full_suite(const ScenarioOptions& options);

/// File-driven scenarios.
std::vector<Report> scenario_validate_file(const std::string& path,
                                           const ScenarioOptions& options);
std::vector<Report> scenario_build_from_family_file(
    const std::string& path, const ScenarioOptions& options);
std::vector<Report> scenario_semivariation_file(const std::string& path,
                                                const ScenarioOptions& options);

struct GenerateConfig {
  InstanceKind kind = InstanceKind::Representation;
  int atoms = 2;
  std::vector<int> domain_blocks = {2};
  std::vector<int> codomain_blocks;   // empty: full matrix algebra default
  std::vector<int> multiplicities;    // representation kinds; empty: all 1
  int kraus_terms = 2;                // measure kind
  std::string family = "conjugation"; // family-probe-set kind
  int samples = 12;
  std::uint64_t seed = 1;
};

/// Deterministic instance generation; generated measures and representations
/// pass their validators.
InstanceFile generate_instance(const GenerateConfig& config);

}  // namespace ovm
