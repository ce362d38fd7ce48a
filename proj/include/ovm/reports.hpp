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

#include <json.hpp>

namespace ovm {

/// One named check inside a report. Failed checks always carry a witness
/// object that reproduces the defect (seed, atom index, message, ...).
struct CheckRecord {
  std::string name;
  bool pass = false;
  double defect = 0.0;
  double tol = 0.0;
  nlohmann::json witness;
};

/// Machine-readable record of one scenario trial, emitted as one JSON line.
struct Report {
  std::string scenario;
  int trial = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::vector<CheckRecord> checks;
  double wall_ms = 0.0;
};

/// Adds a check and keeps the report's pass flag in sync. A failing check
/// without a witness gets one synthesized from the defect and seed.
void add_check(Report& report, const std::string& name, double defect,
               double tol, nlohmann::json witness = nullptr);

nlohmann::json report_to_json(const Report& report, bool include_wall = true);
std::string report_line(const Report& report);

bool all_pass(const std::vector<Report>& reports);
double worst_defect(const std::vector<Report>& reports,
                    const std::string& check_name);

}  // namespace ovm
