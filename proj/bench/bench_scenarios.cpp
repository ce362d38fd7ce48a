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

// Times the serial reference path against the OpenMP batch path on the
// heavier scenario workloads and verifies both produce identical reports.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "ovm/scenarios.hpp"

using namespace ovm;

namespace {

std::string strip_wall(const std::vector<Report>& reports) {
  std::string out;
  for (const Report& r : reports) {
    out += report_to_json(r, /*include_wall=*/false).dump();
    out += "\n";
  }
  return out;
}

double time_run(const std::function<std::vector<Report>()>& fn,
                std::string* digest) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Report> reports = fn();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (digest != nullptr) *digest = strip_wall(reports);
  return seconds;
}

}  // namespace

int main(int argc, char** argv) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (argc > 1) workers = std::stoi(argv[1]);
  if (workers < 2) workers = 2;

  ScenarioOptions serial;
  serial.seed = 42;
  serial.workers = 1;

  struct Case {
    const char* name;
    int trials;
    std::vector<Report> (*run)(const ScenarioOptions&);
  };
  const std::vector<Case> cases = {
      {"roundtrip", 200, scenario_roundtrip},
      {"projection-family-reconstruction", 60, scenario_projection_family},
      {"positivity", 400, scenario_positivity},
      {"jordan-identity", 4000, scenario_jordan},
  };

  std::printf("%-22s %10s %10s %8s  %s\n", "scenario", "serial[s]",
              "omp[s]", "speedup", "identical");
  for (const Case& c : cases) {
    ScenarioOptions s = serial;
    s.trials = c.trials;
    ScenarioOptions p = s;
    p.workers = workers;

    std::string serial_digest, parallel_digest;
    const double ts = time_run([&] { return c.run(s); }, &serial_digest);
    const double tp = time_run([&] { return c.run(p); }, &parallel_digest);
    std::printf("%-22s %10.3f %10.3f %7.2fx  %s\n", c.name, ts, tp, ts / tp,
                serial_digest == parallel_digest ? "yes" : "NO");
  }
  std::printf("(workers = %d)\n", workers);
  return 0;
}
