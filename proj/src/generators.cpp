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

#include "ovm/generators.hpp"

namespace ovm {

namespace {

NonNegativeMeasure rescale_to_unit_mass(const NonNegativeMeasure& m) {
  const double mass = m.identity_mass_norm();
  if (mass <= 0.0) return m;
  const int atoms = m.space().atom_count();
  std::vector<std::vector<AlgebraElement>> scaled(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < m.domain().unit_count(); ++u) {
      scaled[x].push_back(Complex(1.0 / mass, 0.0) * m.basis_value(x, u));
    }
  }
  return NonNegativeMeasure(m.space(), m.domain(), m.codomain(),
                            std::move(scaled));
}

}  // namespace

NonNegativeMeasure make_identity_measure(int atoms,
                                         const MatrixAlgebra& algebra) {
  const FiniteMeasurableSpace space(atoms);
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (const auto& [r, c] : algebra.pattern_units()) {
      maps[x].push_back(AlgebraElement::unit(algebra, r, c));
    }
  }
  return NonNegativeMeasure(space, algebra, algebra, std::move(maps));
}

NonNegativeMeasure make_cp_measure(int atoms, const MatrixAlgebra& domain,
                                   const MatrixAlgebra& codomain,
                                   int kraus_terms, std::uint64_t seed) {
  const FiniteMeasurableSpace space(atoms);
  Rng rng(seed);
  const int d1 = domain.ambient_dim();
  std::vector<std::vector<ComplexMatrix>> kraus(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int k = 0; k < kraus_terms; ++k) {
      ComplexMatrix v = ComplexMatrix::Zero(codomain.ambient_dim(), d1);
      for (int b = 0; b < codomain.block_count(); ++b) {
        v.block(codomain.block_offset(b), 0, codomain.blocks()[b], d1) =
            random_gaussian_matrix(rng, codomain.blocks()[b], d1);
      }
      kraus[x].push_back(v);
    }
  }
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (const auto& [r, c] : domain.pattern_units()) {
      ComplexMatrix unit = ComplexMatrix::Zero(d1, d1);
      unit(r, c) = 1.0;
      ComplexMatrix acc = ComplexMatrix::Zero(codomain.ambient_dim(),
                                              codomain.ambient_dim());
      for (const ComplexMatrix& v : kraus[x]) acc += v * unit * v.adjoint();
      maps[x].push_back(AlgebraElement(codomain, acc));
    }
  }
  return rescale_to_unit_mass(NonNegativeMeasure(
      space, domain, codomain, std::move(maps)));
}

NonNegativeMeasure make_transpose_measure(int atoms,
                                          const MatrixAlgebra& domain,
                                          std::uint64_t seed) {
  const FiniteMeasurableSpace space(atoms);
  Rng rng(seed);
  const int d = domain.ambient_dim();
  const MatrixAlgebra codomain = MatrixAlgebra::full(d);
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    const ComplexMatrix v = random_gaussian_matrix(rng, d, d);
    for (const auto& [r, c] : domain.pattern_units()) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(c, r) = 1.0;  // E_rc transposed
      maps[x].push_back(AlgebraElement(codomain, v * unit * v.adjoint()));
    }
  }
  return rescale_to_unit_mass(NonNegativeMeasure(
      space, domain, codomain, std::move(maps)));
}

NonNegativeMeasure make_conjugation_measure(int atoms,
                                            const MatrixAlgebra& domain,
                                            std::uint64_t seed) {
  const FiniteMeasurableSpace space(atoms);
  Rng rng(seed);
  const int d = domain.ambient_dim();
  const MatrixAlgebra codomain = MatrixAlgebra::full(d);
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    const ComplexMatrix v = random_gaussian_matrix(rng, d, d);
    for (const auto& [r, c] : domain.pattern_units()) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(r, c) = 1.0;
      maps[x].push_back(AlgebraElement(codomain, v * unit * v.adjoint()));
    }
  }
  return NonNegativeMeasure(space, domain, codomain, std::move(maps));
}

NonNegativeMeasure make_embedding_spectral_measure(int atoms,
                                                   const MatrixAlgebra& domain,
                                                   std::uint64_t seed) {
  const FiniteMeasurableSpace space(atoms);
  const int d = domain.ambient_dim();
  const MatrixAlgebra codomain = MatrixAlgebra::full(atoms * d);
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(rng, atoms * d);
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (const auto& [r, c] : domain.pattern_units()) {
      ComplexMatrix big = ComplexMatrix::Zero(atoms * d, atoms * d);
      big(x * d + r, x * d + c) = 1.0;
      maps[x].push_back(AlgebraElement(codomain, u * big * u.adjoint()));
    }
  }
  return NonNegativeMeasure(space, domain, codomain, std::move(maps));
}

}  // namespace ovm
