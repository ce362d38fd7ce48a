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

#include "ovm/reports.hpp"

#include <algorithm>

namespace ovm {

void add_check(Report& report, const std::string& name, double defect,
               double tol, nlohmann::json witness) {
  CheckRecord check;
  check.name = name;
  check.defect = defect;
  check.tol = tol;
  check.pass = defect <= tol;
  if (!check.pass && witness.is_null()) {
    witness = nlohmann::json{{"defect", defect}, {"seed", report.seed}};
  }
  check.witness = std::move(witness);
  report.pass = report.pass && check.pass;
  report.checks.push_back(std::move(check));
}

nlohmann::json report_to_json(const Report& report, bool include_wall) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::json entry{{"name", c.name},
                         {"pass", c.pass},
                         {"defect", c.defect},
                         {"tol", c.tol}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  nlohmann::json out{{"scenario", report.scenario},
                     {"trial", report.trial},
                     {"seed", report.seed},
                     {"pass", report.pass},
                     {"checks", std::move(checks)}};
  if (include_wall) out["wall_ms"] = report.wall_ms;
  return out;
}

std::string report_line(const Report& report) {
  return report_to_json(report).dump();
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.pass; });
}

double worst_defect(const std::vector<Report>& reports,
                    const std::string& check_name) {
  double worst = 0.0;
  for (const Report& r : reports) {
    for (const CheckRecord& c : r.checks) {
      if (c.name == check_name) worst = std::max(worst, c.defect);
    }
  }
  return worst;
}

}  // namespace ovm
