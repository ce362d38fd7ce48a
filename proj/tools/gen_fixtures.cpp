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

// Writes the fixture set shipped under fixtures/: valid instances that the
// validators accept and invalid ones they must reject with witnesses.

#include <filesystem>
#include <iostream>

#include "ovm/generators.hpp"
#include "ovm/instance_io.hpp"
#include "ovm/scenarios.hpp"

using namespace ovm;

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  const auto write = [&dir](InstanceFile instance, const std::string& name) {
    save_instance(instance, (dir / name).string());
    std::cout << "wrote " << (dir / name).string() << "\n";
  };

  // Identity-map measure on three atoms: the semivariation reference
  // instance (lower bound >= 3, upper bound = 12).
  {
    InstanceFile f;
    f.kind = InstanceKind::Measure;
    f.measure = make_identity_measure(3, MatrixAlgebra({2}));
    f.description = "identity-map measure on three atoms";
    write(std::move(f), "identity-3atoms.json");
  }

  // Valid CP measure; the Choi certificate accepts it.
  {
    GenerateConfig config;
    config.kind = InstanceKind::Measure;
    config.atoms = 2;
    config.domain_blocks = {2};
    config.kraus_terms = 2;
    config.seed = 7;
    write(generate_instance(config), "cp-measure.json");
  }

  // Valid representation (2 atoms, multiplicities 1 and 2 over M_2: the
  // codomain is 6-dimensional).
  {
    GenerateConfig config;
    config.kind = InstanceKind::Representation;
    config.atoms = 2;
    config.domain_blocks = {2};
    config.multiplicities = {1, 2};
    config.seed = 7;
    write(generate_instance(config), "representation-6dim.json");
  }

  // Spectral measure with a non-projection atom value: rejected with the
  // witness atom index 1.
  {
    const FiniteMeasurableSpace space(2);
    const MatrixAlgebra domain({1});
    const MatrixAlgebra codomain({2});
    std::vector<std::vector<AlgebraElement>> maps(2);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 0.9;  // not idempotent
    maps[0].push_back(AlgebraElement(codomain, p0));
    maps[1].push_back(AlgebraElement(codomain, p1));
    InstanceFile f;
    f.kind = InstanceKind::SpectralMeasure;
    f.measure = NonNegativeMeasure(space, domain, codomain, std::move(maps));
    f.description = "atom 1 carries a non-projection value";
    write(std::move(f), "not-spectral.json");
  }

  // Non-additive family probe set.
  {
    GenerateConfig config;
    config.kind = InstanceKind::FamilyProbeSet;
    config.atoms = 2;
    config.domain_blocks = {2};
    config.family = "quadratic";
    config.seed = 5;
    InstanceFile f = generate_instance(config);
    f.description = "atomwise (A + A^2)/2; additivity fails";
    write(std::move(f), "non-additive-family.json");
  }

  // Scaled and transpose-composed representations: certification rejects
  // both (unitality, respectively multiplicativity).
  {
    GenerateConfig config;
    config.kind = InstanceKind::Representation;
    config.atoms = 2;
    config.domain_blocks = {2};
    config.multiplicities = {1, 1};
    config.seed = 11;
    const InstanceFile base = generate_instance(config);
    const Representation& rho = *base.representation;

    std::vector<std::vector<AlgebraElement>> doubled(2), transposed(2);
    for (int x = 0; x < 2; ++x) {
      for (int u = 0; u < rho.domain().unit_count(); ++u) {
        doubled[x].push_back(Complex(2.0, 0.0) * rho.basis_action(x, u));
        transposed[x].push_back(AlgebraElement(
            rho.codomain(), rho.basis_action(x, u).matrix().transpose()));
      }
    }
    InstanceFile scaled;
    scaled.kind = InstanceKind::Representation;
    scaled.representation = Representation(rho.space(), rho.domain(),
                                           rho.codomain(), std::move(doubled));
    scaled.description = "basis action scaled by 2; unitality fails";
    write(std::move(scaled), "scaled-representation.json");

    InstanceFile flipped;
    flipped.kind = InstanceKind::Representation;
    flipped.representation = Representation(
        rho.space(), rho.domain(), rho.codomain(), std::move(transposed));
    flipped.description = "transpose-composed action; multiplicativity fails";
    write(std::move(flipped), "transposed-representation.json");
  }

  // Representation-generated spectral measure with one basis entry bumped by
  // 1e-3: validation fails before any round trip.
  {
    const NonNegativeMeasure good =
        make_embedding_spectral_measure(2, MatrixAlgebra({2}), 13);
    std::vector<std::vector<AlgebraElement>> maps(2);
    for (int x = 0; x < 2; ++x) {
      for (int u = 0; u < good.domain().unit_count(); ++u) {
        AlgebraElement v = good.basis_value(x, u);
        if (x == 0 && u == 0) {
          ComplexMatrix noisy = v.matrix();
          noisy(0, 0) += Complex(1e-3, 0.0);
          v = AlgebraElement(good.codomain(), noisy);
        }
        maps[x].push_back(v);
      }
    }
    InstanceFile f;
    f.kind = InstanceKind::SpectralMeasure;
    f.measure = NonNegativeMeasure(good.space(), good.domain(),
                                   good.codomain(), std::move(maps));
    f.description = "spectral measure with 1e-3 non-spectral noise";
    write(std::move(f), "perturbed-measure.json");
  }

  return 0;
}
