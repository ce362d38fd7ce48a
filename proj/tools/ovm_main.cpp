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

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ovm/scenarios.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// input error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit_reports(const std::vector<ovm::Report>& reports,
                 const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out = &file;
  }
  for (const ovm::Report& report : reports) {
    *out << ovm::report_line(report) << "\n";
  }
  return ovm::all_pass(reports) ? kExitPass : kExitFail;
}

std::vector<int> parse_blocks(const std::string& csv, const char* what) {
  std::vector<int> blocks;
  std::string token;
  for (const char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) blocks.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (blocks.empty()) {
    throw ovm::BadConfig(std::string("empty ") + what + " list");
  }
  return blocks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional operator-valued measures: validators, "
               "builders and round-trip suites"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run a scenario and stream reports");
  std::string scenario;
  run->add_option("scenario", scenario,
                  "validate | build-from-family | roundtrip | semivariation "
                  "| convergence | multiplicativity | full-suite")
      ->required();
  std::string in_path, out_path;
  ovm::ScenarioOptions options;
  run->add_option("--in", in_path, "Instance file (file-driven scenarios)");
  run->add_option("--out", out_path, "Write report lines to a file");
  run->add_option("--seed", options.seed, "Base seed");
  run->add_option("--trials", options.trials,
                  "Trial count (0 = scenario default)");
  run->add_option("--tol-abs", options.tol_abs, "Absolute tolerance");
  run->add_option("--workers", options.workers, "Concurrent trial workers");

  // --- generate ----------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "Write a deterministic instance");
  std::string kind_str = "representation";
  std::string gen_out;
  std::string domain_csv = "2";
  std::string codomain_csv;
  std::string multiplicities_csv;
  ovm::GenerateConfig config;
  gen->add_option("--kind", kind_str,
                  "measure | spectral-measure | representation | "
                  "family-probe-set");
  gen->add_option("--out", gen_out, "Output path")->required();
  gen->add_option("--seed", config.seed, "Seed");
  gen->add_option("--atoms", config.atoms, "Atom count");
  gen->add_option("--domain-blocks", domain_csv, "Domain block sizes, csv");
  gen->add_option("--codomain-blocks", codomain_csv,
                  "Codomain block sizes, csv (default: full algebra)");
  gen->add_option("--multiplicities", multiplicities_csv,
                  "Per-atom multiplicities, csv (representation kinds)");
  gen->add_option("--kraus", config.kraus_terms, "Kraus terms per atom");
  gen->add_option("--family", config.family,
                  "conjugation | quadratic | norm-identity | "
                  "constant-spectral | embedding");
  gen->add_option("--samples", config.samples, "Probe samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!(options.tol_abs >= 0.0) || !std::isfinite(options.tol_abs)) {
      throw ovm::BadConfig("--tol-abs must be finite and nonnegative");
    }
    if (run->parsed()) {
      std::vector<ovm::Report> reports;
      if (scenario == "validate") {
        if (in_path.empty()) throw ovm::BadConfig("validate needs --in");
        reports = ovm::scenario_validate_file(in_path, options);
      } else if (scenario == "build-from-family") {
        if (in_path.empty()) {
          throw ovm::BadConfig("build-from-family needs --in");
        }
        reports = ovm::scenario_build_from_family_file(in_path, options);
      } else if (scenario == "semivariation") {
        reports = in_path.empty()
                      ? ovm::scenario_semivariation(options)
                      : ovm::scenario_semivariation_file(in_path, options);
      } else if (scenario == "roundtrip") {
        reports = ovm::scenario_roundtrip(options);
      } else if (scenario == "convergence") {
        reports = ovm::scenario_convergence(options);
      } else if (scenario == "multiplicativity") {
        reports = ovm::scenario_multiplicativity(options);
      } else if (scenario == "full-suite") {
        reports = ovm::scenario_full_suite(options);
      } else {
        throw ovm::BadConfig("unknown scenario '" + scenario + "'");
      }
      return emit_reports(reports, out_path);
    }

    // generate
    config.kind = ovm::kind_from_name(kind_str);
    config.domain_blocks = parse_blocks(domain_csv, "domain block");
    if (!codomain_csv.empty()) {
      config.codomain_blocks = parse_blocks(codomain_csv, "codomain block");
    }
    if (!multiplicities_csv.empty()) {
      config.multiplicities = parse_blocks(multiplicities_csv, "multiplicity");
      for (int& k : config.multiplicities) k = std::max(k, 0);
    }
    const ovm::InstanceFile instance = ovm::generate_instance(config);
    ovm::save_instance(instance, gen_out);
    return kExitPass;
  } catch (const ovm::BadConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ovm::BadInstanceFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ovm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
