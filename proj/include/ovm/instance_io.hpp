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

#include <optional>
#include <string>

#include <json.hpp>

#include "ovm/families.hpp"
#include "ovm/measures.hpp"
#include "ovm/representations.hpp"

namespace ovm {

enum class InstanceKind {
  Measure,
  SpectralMeasure,
  Representation,
  FamilyProbeSet,
};

std::string kind_name(InstanceKind kind);
InstanceKind kind_from_name(const std::string& name);

/// Named builtin family used by probe-set instances; the negative kinds ship
/// as rejection fixtures.
struct FamilyProbeInstance {
  FiniteMeasurableSpace space;
  MatrixAlgebra domain;
  MatrixAlgebra codomain;
  std::string family;  // conjugation | quadratic | norm-identity |
                       // constant-spectral | embedding
  std::uint64_t family_seed = 0;
  int samples = 12;

  bool is_projection_side() const {
    return family == "constant-spectral" || family == "embedding";
  }
  PositiveFamily positive_family() const;
  ProjectionFamily projection_family() const;
};

/// One self-describing instance document: kind, space, algebras and payload
/// (basis maps, basis actions or a family spec) with complex scalars stored
/// as [re, im] pairs.
struct InstanceFile {
  InstanceKind kind = InstanceKind::Measure;
  std::optional<NonNegativeMeasure> measure;          // measure kinds
  std::optional<Representation> representation;       // representation kind
  std::optional<FamilyProbeInstance> probe;           // family-probe-set kind
  std::string description;
  std::optional<std::uint64_t> seed;
};

nlohmann::json instance_to_json(const InstanceFile& instance);
InstanceFile instance_from_json(const nlohmann::json& doc);

std::string serialize_instance(const InstanceFile& instance);
InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& instance, const std::string& path);

/// Resolves an input path, falling back to $OVM_FIXTURES/<path> when the
/// plain path does not exist.
std::string resolve_input_path(const std::string& path);

}  // namespace ovm
