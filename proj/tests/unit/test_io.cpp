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

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ovm/instance_io.hpp"
#include "ovm/scenarios.hpp"

using namespace ovm;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("instance schema round trip is byte-identical") {
  GenerateConfig config;
  config.kind = InstanceKind::Representation;
  config.atoms = 2;
  config.domain_blocks = {2};
  config.multiplicities = {1, 2};
  config.seed = 7;
  const InstanceFile original = generate_instance(config);

  const std::string first = serialize_instance(original);
  const InstanceFile reloaded = instance_from_json(nlohmann::json::parse(first));
  const std::string second = serialize_instance(reloaded);
  CHECK(first == second);

  // The representation example: multiplicities (1,2) over M_2 on two atoms
  // give a 6-dimensional codomain.
  REQUIRE(original.representation.has_value());
  CHECK(original.representation->codomain().ambient_dim() == 6);
}

TEST_CASE("generate is deterministic per seed") {
  GenerateConfig config;
  config.kind = InstanceKind::Measure;
  config.atoms = 2;
  config.domain_blocks = {2};
  config.seed = 9;
  const std::string a = serialize_instance(generate_instance(config));
  const std::string b = serialize_instance(generate_instance(config));
  CHECK(a == b);
  config.seed = 10;
  CHECK(serialize_instance(generate_instance(config)) != a);
}

TEST_CASE("generated measures and representations pass their validators") {
  GenerateConfig config;
  config.kind = InstanceKind::Measure;
  config.atoms = 2;
  config.domain_blocks = {2};
  config.seed = 3;
  const InstanceFile m = generate_instance(config);
  CHECK(validate_nonneg(*m.measure, PositivityPolicy::ChoiCertificate).pass);

  config.kind = InstanceKind::SpectralMeasure;
  const InstanceFile sm = generate_instance(config);
  const NonNegativeSpectralMeasure spectral(*sm.measure);
  CHECK(validate_nonneg_spectral(spectral).pass);

  config.kind = InstanceKind::Representation;
  const InstanceFile rep = generate_instance(config);
  Representation rho = *rep.representation;
  CHECK(certify_representation(rho).pass);
}

TEST_CASE("instance files survive a disk round trip") {
  GenerateConfig config;
  config.kind = InstanceKind::SpectralMeasure;
  config.atoms = 2;
  config.domain_blocks = {1, 1};
  config.seed = 21;
  const InstanceFile original = generate_instance(config);
  const auto path = temp_file("ovm_io_test.json");
  save_instance(original, path.string());
  const InstanceFile loaded = load_instance(path.string());
  CHECK(serialize_instance(original) == serialize_instance(loaded));
  std::filesystem::remove(path);
}

TEST_CASE("bad instance files carry the offending path") {
  const auto path = temp_file("ovm_bad_instance.json");

  std::ofstream(path.string()) << R"({"kind": "measure"})";
  CHECK_THROWS_WITH(load_instance(path.string()),
                    Catch::Matchers::ContainsSubstring("space.atom_count"));

  std::ofstream(path.string()) << R"({
    "kind": "measure",
    "space": {"atom_count": 2},
    "domain": {"blocks": [2]},
    "codomain": {"blocks": [2]},
    "payload": {"atom_maps": [[]]}
  })";
  CHECK_THROWS_WITH(load_instance(path.string()),
                    Catch::Matchers::ContainsSubstring("payload.atom_maps"));

  std::ofstream(path.string()) << R"({"kind": "nonsense"})";
  CHECK_THROWS_AS(load_instance(path.string()), BadInstanceFile);
  std::filesystem::remove(path);
}

TEST_CASE("resolve_input_path falls back to the fixture directory") {
  const auto dir = std::filesystem::temp_directory_path() / "ovm_fixtures";
  std::filesystem::create_directories(dir);
  std::ofstream((dir / "probe.json").string()) << "{}";
  setenv("OVM_FIXTURES", dir.string().c_str(), 1);
  CHECK(resolve_input_path("probe.json") == (dir / "probe.json").string());
  CHECK(resolve_input_path("missing.json") == "missing.json");
  unsetenv("OVM_FIXTURES");
  std::filesystem::remove_all(dir);
}

TEST_CASE("family probe instances build the advertised families") {
  GenerateConfig config;
  config.kind = InstanceKind::FamilyProbeSet;
  config.atoms = 2;
  config.domain_blocks = {2};
  config.family = "conjugation";
  config.seed = 4;
  const InstanceFile conj = generate_instance(config);
  CHECK(check_positive_family(conj.probe->positive_family()).pass);

  config.family = "quadratic";
  const InstanceFile quad = generate_instance(config);
  CHECK_FALSE(check_positive_family(quad.probe->positive_family()).pass);

  config.family = "embedding";
  const InstanceFile emb = generate_instance(config);
  CHECK(check_projection_family(emb.probe->projection_family()).pass);

  config.family = "constant-spectral";
  config.codomain_blocks = {2};
  const InstanceFile fixed = generate_instance(config);
  CHECK_FALSE(check_projection_family(fixed.probe->projection_family()).pass);
}
