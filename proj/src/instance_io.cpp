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

#include "ovm/instance_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "ovm/generators.hpp"

namespace ovm {

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Measure: return "measure";
    case InstanceKind::SpectralMeasure: return "spectral-measure";
    case InstanceKind::Representation: return "representation";
    case InstanceKind::FamilyProbeSet: return "family-probe-set";
  }
  throw BadConfig("kind_name: unreachable");
}

InstanceKind kind_from_name(const std::string& name) {
  if (name == "measure") return InstanceKind::Measure;
  if (name == "spectral-measure") return InstanceKind::SpectralMeasure;
  if (name == "representation") return InstanceKind::Representation;
  if (name == "family-probe-set") return InstanceKind::FamilyProbeSet;
  throw BadInstanceFile("unknown instance kind '" + name + "'");
}

PositiveFamily FamilyProbeInstance::positive_family() const {
  const FiniteMeasurableSpace space_copy = space;
  const MatrixAlgebra domain_copy = domain;
  const MatrixAlgebra codomain_copy = codomain;
  if (family == "conjugation") {
    const NonNegativeMeasure m =
        make_conjugation_measure(space.atom_count(), domain, family_seed);
    if (m.codomain() != codomain) {
      throw BadInstanceFile("family-probe-set: conjugation families need the "
                            "full matrix codomain of the domain's ambient "
                            "dimension");
    }
    return family_from_measure(m);
  }
  if (family == "quadratic") {
    if (domain != codomain) {
      throw BadInstanceFile(
          "family-probe-set: quadratic families need domain == codomain");
    }
    return PositiveFamily{
        space, domain, codomain,
        [space_copy, codomain_copy](const AlgebraElement& a) {
          const AlgebraElement v = Complex(0.5, 0.0) * (a + a * a);
          return PovMeasure(
              space_copy, codomain_copy,
              std::vector<AlgebraElement>(space_copy.atom_count(), v));
        }};
  }
  if (family == "norm-identity") {
    return PositiveFamily{
        space, domain, codomain,
        [space_copy, codomain_copy](const AlgebraElement& a) {
          const AlgebraElement v =
              Complex(operator_norm(a), 0.0) *
              AlgebraElement::identity(codomain_copy);
          return PovMeasure(
              space_copy, codomain_copy,
              std::vector<AlgebraElement>(space_copy.atom_count(), v));
        }};
  }
  throw BadInstanceFile("family-probe-set: '" + family +
                        "' is not a positive-side family");
}

ProjectionFamily FamilyProbeInstance::projection_family() const {
  const FiniteMeasurableSpace space_copy = space;
  const MatrixAlgebra codomain_copy = codomain;
  if (family == "embedding") {
    const NonNegativeMeasure m = make_embedding_spectral_measure(
        space.atom_count(), domain, family_seed);
    return projection_family_from_measure(m);
  }
  if (family == "constant-spectral") {
    const AlgebraElement p0 = sample_projection(codomain, family_seed);
    std::vector<AlgebraElement> atoms;
    atoms.push_back(p0);
    AlgebraElement rest = AlgebraElement::identity(codomain) - p0;
    for (int x = 1; x < space.atom_count(); ++x) {
      atoms.push_back(x == 1 ? rest : AlgebraElement::zero(codomain));
    }
    if (space.atom_count() == 1) atoms[0] = AlgebraElement::identity(codomain);
    const SpectralMeasure fixed(PovMeasure(space, codomain, atoms));
    return ProjectionFamily{
        space, domain, codomain,
        [fixed](const AlgebraElement&) { return fixed; }};
  }
  throw BadInstanceFile("family-probe-set: '" + family +
                        "' is not a projection-side family");
}

namespace {

nlohmann::json json_from_matrix(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc, int dim,
                               const std::string& path) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != dim) {
    throw BadInstanceFile(path + ": expected " + std::to_string(dim) +
                          " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw BadInstanceFile(path + "[" + std::to_string(i) + "]: expected " +
                            std::to_string(dim) + " columns");
    }
    for (int j = 0; j < dim; ++j) {
      const auto& cell = row[j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw BadInstanceFile(path + "[" + std::to_string(i) + "][" +
                              std::to_string(j) +
                              "]: expected an [re, im] pair");
      }
      m(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

nlohmann::json json_from_table(
    const std::function<const AlgebraElement&(int, int)>& table, int atoms,
    int units) {
  nlohmann::json out = nlohmann::json::array();
  for (int x = 0; x < atoms; ++x) {
    nlohmann::json per_atom = nlohmann::json::array();
    for (int u = 0; u < units; ++u) {
      per_atom.push_back(json_from_matrix(table(x, u).matrix()));
    }
    out.push_back(std::move(per_atom));
  }
  return out;
}

std::vector<std::vector<AlgebraElement>> table_from_json(
    const nlohmann::json& doc, const FiniteMeasurableSpace& space,
    const MatrixAlgebra& domain, const MatrixAlgebra& codomain,
    const std::string& path) {
  const int atoms = space.atom_count();
  const int units = domain.unit_count();
  if (!doc.is_array() || static_cast<int>(doc.size()) != atoms) {
    throw BadInstanceFile(path + ": expected one entry per atom (" +
                          std::to_string(atoms) + ")");
  }
  std::vector<std::vector<AlgebraElement>> table(atoms);
  for (int x = 0; x < atoms; ++x) {
    const auto& per_atom = doc[x];
    const std::string atom_path = path + "[" + std::to_string(x) + "]";
    if (!per_atom.is_array() || static_cast<int>(per_atom.size()) != units) {
      throw BadInstanceFile(atom_path + ": expected one matrix per domain "
                            "unit (" + std::to_string(units) + ")");
    }
    for (int u = 0; u < units; ++u) {
      const ComplexMatrix m = matrix_from_json(
          per_atom[u], codomain.ambient_dim(),
          atom_path + "[" + std::to_string(u) + "]");
      try {
        table[x].emplace_back(codomain, m);
      } catch (const Error& e) {
        throw BadInstanceFile(atom_path + "[" + std::to_string(u) +
                              "]: " + e.what());
      }
    }
  }
  return table;
}

MatrixAlgebra algebra_from_json(const nlohmann::json& doc,
                                const std::string& path) {
  if (!doc.is_object() || !doc.contains("blocks") ||
      !doc["blocks"].is_array() || doc["blocks"].empty()) {
    throw BadInstanceFile(path + ": expected {\"blocks\": [..]}");
  }
  std::vector<int> blocks;
  for (const auto& b : doc["blocks"]) {
    if (!b.is_number_integer() || b.get<int>() < 1) {
      throw BadInstanceFile(path + ".blocks: block sizes must be positive "
                            "integers");
    }
    blocks.push_back(b.get<int>());
  }
  return MatrixAlgebra(blocks);
}

}  // namespace

nlohmann::json instance_to_json(const InstanceFile& instance) {
  nlohmann::json doc;
  doc["format"] = "ovm-instance/1";
  doc["kind"] = kind_name(instance.kind);

  const auto algebra_json = [](const MatrixAlgebra& a) {
    return nlohmann::json{{"blocks", a.blocks()}};
  };

  nlohmann::json payload;
  switch (instance.kind) {
    case InstanceKind::Measure:
    case InstanceKind::SpectralMeasure: {
      if (!instance.measure.has_value()) {
        throw BadConfig("instance_to_json: measure payload missing");
      }
      const NonNegativeMeasure& m = *instance.measure;
      doc["space"] = {{"atom_count", m.space().atom_count()}};
      doc["domain"] = algebra_json(m.domain());
      doc["codomain"] = algebra_json(m.codomain());
      payload["atom_maps"] = json_from_table(
          [&m](int x, int u) -> const AlgebraElement& {
            return m.basis_value(x, u);
          },
          m.space().atom_count(), m.domain().unit_count());
      break;
    }
    case InstanceKind::Representation: {
      if (!instance.representation.has_value()) {
        throw BadConfig("instance_to_json: representation payload missing");
      }
      const Representation& rho = *instance.representation;
      doc["space"] = {{"atom_count", rho.space().atom_count()}};
      doc["domain"] = algebra_json(rho.domain());
      doc["codomain"] = algebra_json(rho.codomain());
      payload["basis_action"] = json_from_table(
          [&rho](int x, int u) -> const AlgebraElement& {
            return rho.basis_action(x, u);
          },
          rho.space().atom_count(), rho.domain().unit_count());
      break;
    }
    case InstanceKind::FamilyProbeSet: {
      if (!instance.probe.has_value()) {
        throw BadConfig("instance_to_json: probe payload missing");
      }
      const FamilyProbeInstance& probe = *instance.probe;
      doc["space"] = {{"atom_count", probe.space.atom_count()}};
      doc["domain"] = algebra_json(probe.domain);
      doc["codomain"] = algebra_json(probe.codomain);
      payload["family"] = probe.family;
      payload["family_seed"] = probe.family_seed;
      payload["samples"] = probe.samples;
      break;
    }
  }
  doc["payload"] = std::move(payload);

  nlohmann::json metadata;
  if (!instance.description.empty()) metadata["description"] = instance.description;
  if (instance.seed.has_value()) metadata["seed"] = *instance.seed;
  if (!metadata.is_null()) doc["metadata"] = std::move(metadata);
  return doc;
}

InstanceFile instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw BadInstanceFile("document is not an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw BadInstanceFile("kind: missing or not a string");
  }
  InstanceFile out;
  out.kind = kind_from_name(doc["kind"].get<std::string>());

  if (!doc.contains("space") || !doc["space"].contains("atom_count") ||
      !doc["space"]["atom_count"].is_number_integer()) {
    throw BadInstanceFile("space.atom_count: missing or not an integer");
  }
  const int atoms = doc["space"]["atom_count"].get<int>();
  if (atoms < 1) throw BadInstanceFile("space.atom_count: must be >= 1");
  const FiniteMeasurableSpace space(atoms);

  if (!doc.contains("domain")) throw BadInstanceFile("domain: missing");
  if (!doc.contains("codomain")) throw BadInstanceFile("codomain: missing");
  const MatrixAlgebra domain = algebra_from_json(doc["domain"], "domain");
  const MatrixAlgebra codomain = algebra_from_json(doc["codomain"], "codomain");

  if (!doc.contains("payload") || !doc["payload"].is_object()) {
    throw BadInstanceFile("payload: missing or not an object");
  }
  const nlohmann::json& payload = doc["payload"];

  switch (out.kind) {
    case InstanceKind::Measure:
    case InstanceKind::SpectralMeasure: {
      if (!payload.contains("atom_maps")) {
        throw BadInstanceFile("payload.atom_maps: missing");
      }
      out.measure = NonNegativeMeasure(
          space, domain, codomain,
          table_from_json(payload["atom_maps"], space, domain, codomain,
                          "payload.atom_maps"));
      break;
    }
    case InstanceKind::Representation: {
      if (!payload.contains("basis_action")) {
        throw BadInstanceFile("payload.basis_action: missing");
      }
      out.representation = Representation(
          space, domain, codomain,
          table_from_json(payload["basis_action"], space, domain, codomain,
                          "payload.basis_action"));
      break;
    }
    case InstanceKind::FamilyProbeSet: {
      if (!payload.contains("family") || !payload["family"].is_string()) {
        throw BadInstanceFile("payload.family: missing or not a string");
      }
      FamilyProbeInstance probe{space, domain, codomain,
                                payload["family"].get<std::string>(), 0, 12};
      if (payload.contains("family_seed")) {
        probe.family_seed = payload["family_seed"].get<std::uint64_t>();
      }
      if (payload.contains("samples")) {
        probe.samples = payload["samples"].get<int>();
      }
      out.probe = std::move(probe);
      break;
    }
  }

  if (doc.contains("metadata")) {
    const nlohmann::json& metadata = doc["metadata"];
    if (metadata.contains("description")) {
      out.description = metadata["description"].get<std::string>();
    }
    if (metadata.contains("seed")) {
      out.seed = metadata["seed"].get<std::uint64_t>();
    }
  }
  return out;
}

std::string serialize_instance(const InstanceFile& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInstanceFile("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw BadInstanceFile("'" + path + "': " + e.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const BadInstanceFile& e) {
    throw BadInstanceFile("'" + path + "': " + e.what());
  }
}

void save_instance(const InstanceFile& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadConfig("cannot write '" + path + "'");
  out << serialize_instance(instance);
}

std::string resolve_input_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* base = std::getenv("OVM_FIXTURES")) {
    const fs::path candidate = fs::path(base) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;  // let the loader report the failure
}

}  // namespace ovm
