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
#include <cmath>

#include "ovm/measures.hpp"
#include "test_helpers.hpp"

using namespace ovm;
using ovm::test::dist;
using ovm::test::mat;

namespace {

// m^x(A) = A for every atom: the identity-map measure used across the suite.
NonNegativeMeasure identity_measure(int atoms, const MatrixAlgebra& alg) {
  const FiniteMeasurableSpace space(atoms);
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (const auto& [r, c] : alg.pattern_units()) {
      maps[x].push_back(AlgebraElement::unit(alg, r, c));
    }
  }
  return NonNegativeMeasure(space, alg, alg, std::move(maps));
}

// m^x(A) = sum_k V_k A V_k* with Gaussian Kraus terms, rescaled so that
// ||m_id(X)|| = 1. Completely positive by construction.
NonNegativeMeasure cp_measure(int atoms, const MatrixAlgebra& domain,
                              const MatrixAlgebra& codomain, int kraus_terms,
                              std::uint64_t seed) {
  const FiniteMeasurableSpace space(atoms);
  Rng rng(seed);
  const int d1 = domain.ambient_dim();
  std::vector<std::vector<ComplexMatrix>> kraus(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int k = 0; k < kraus_terms; ++k) {
      // One Kraus row per codomain block keeps the image in pattern.
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
      for (const ComplexMatrix& v : kraus[x]) {
        acc += v * unit * v.adjoint();
      }
      maps[x].push_back(AlgebraElement(codomain, acc));
    }
  }
  NonNegativeMeasure m(space, domain, codomain, std::move(maps));
  const double mass = m.identity_mass_norm();
  std::vector<std::vector<AlgebraElement>> scaled(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < domain.unit_count(); ++u) {
      scaled[x].push_back(Complex(1.0 / mass, 0.0) * m.basis_value(x, u));
    }
  }
  return NonNegativeMeasure(space, domain, codomain, std::move(scaled));
}

// m^x(A) = V A^T V*: positive but not completely positive for blocks >= 2.
NonNegativeMeasure transpose_measure(int atoms, const MatrixAlgebra& domain,
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
  NonNegativeMeasure m(space, domain, codomain, std::move(maps));
  const double mass = m.identity_mass_norm();
  std::vector<std::vector<AlgebraElement>> scaled(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < domain.unit_count(); ++u) {
      scaled[x].push_back(Complex(1.0 / mass, 0.0) * m.basis_value(x, u));
    }
  }
  return NonNegativeMeasure(space, domain, codomain, std::move(scaled));
}

}  // namespace

TEST_CASE("MeasurableSet algebra") {
  const FiniteMeasurableSpace space(4);
  const MeasurableSet a = MeasurableSet::of(space, {0, 2});
  const MeasurableSet b = MeasurableSet::of(space, {1, 2});
  CHECK(a.size() == 2);
  CHECK(a.unite(b).size() == 3);
  CHECK(a.intersect(b) == MeasurableSet::singleton(space, 2));
  CHECK(a.complement() == MeasurableSet::of(space, {1, 3}));
  CHECK(a.disjoint(MeasurableSet::singleton(space, 3)));
  CHECK_FALSE(a.disjoint(b));
  CHECK_THROWS_AS(MeasurableSet::singleton(space, 4), std::invalid_argument);
}

TEST_CASE("evaluate: empty set, additivity, basis readout") {
  const MatrixAlgebra alg({2});
  const NonNegativeMeasure m = identity_measure(2, alg);
  const FiniteMeasurableSpace& space = m.space();
  Rng rng(3);
  const AlgebraElement a = sample_element(alg, rng);

  CHECK(m.evaluate(MeasurableSet::empty(space), a).matrix().norm() == 0.0);
  CHECK(dist(m.evaluate(MeasurableSet::full(space), a).matrix(),
             ComplexMatrix(2.0 * a.matrix())) < 1e-15);
  // Basis readout at a singleton.
  CHECK(dist(m.evaluate(MeasurableSet::singleton(space, 1),
                        AlgebraElement::unit(alg, 0, 0))
                 .matrix(),
             m.basis_value(1, 0).matrix()) == 0.0);

  // Finite additivity is a re-bracketed sum.
  const MeasurableSet d1 = MeasurableSet::singleton(space, 0);
  const MeasurableSet d2 = MeasurableSet::singleton(space, 1);
  CHECK(dist(m.evaluate(d1.unite(d2), a).matrix(),
             ComplexMatrix(m.evaluate(d1, a).matrix() +
                           m.evaluate(d2, a).matrix())) <= 1e-12);

  const MatrixAlgebra other({3});
  CHECK_THROWS_AS(m.evaluate(MeasurableSet::full(space),
                             AlgebraElement::identity(other)),
                  DomainMismatch);
}

TEST_CASE("validate_pov accepts PSD atoms and rejects with margins") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra cod({2});

  const PovReport good = validate_pov(
      PovMeasure(space, cod,
                 {sample_positive(cod, 1), sample_positive(cod, 2)}));
  CHECK(good.pass);
  CHECK(good.worst_margin >= -1e-12);

  const PovReport zero = validate_pov(
      PovMeasure(space, cod,
                 {AlgebraElement::zero(cod), AlgebraElement::zero(cod)}));
  CHECK(zero.pass);

  const PovReport bad = validate_pov(PovMeasure(
      space, cod,
      {AlgebraElement(cod, mat({{1.0, 0.0}, {0.0, -0.1}})),
       AlgebraElement::identity(cod)}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.worst_atom == 0);
  CHECK(std::abs(bad.worst_margin + 0.1) < 1e-12);
}

TEST_CASE("validate_spectral on resolutions of identity") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra cod({2});

  const SpectralMeasure diag(PovMeasure(
      space, cod,
      {AlgebraElement(cod, mat({{1.0, 0.0}, {0.0, 0.0}})),
       AlgebraElement(cod, mat({{0.0, 0.0}, {0.0, 1.0}}))}));
  const SpectralReport ok = validate_spectral(diag, {}, true);
  CHECK(ok.pass);
  CHECK(ok.normalization_defect < 1e-12);

  const SpectralMeasure twice_id(PovMeasure(
      space, cod,
      {AlgebraElement::identity(cod), AlgebraElement::identity(cod)}));
  const SpectralReport orth = validate_spectral(twice_id);
  CHECK_FALSE(orth.pass);
  CHECK(std::abs(orth.orthogonality_defect - 1.0) < 1e-12);

  const AlgebraElement p = sample_projection(cod, 9);
  const SpectralMeasure complementary(PovMeasure(
      space, cod, {p, AlgebraElement::identity(cod) - p}));
  CHECK(validate_spectral(complementary, {}, true).pass);
}

TEST_CASE("validate_nonneg: conjugation passes the Choi certificate") {
  const MatrixAlgebra alg({2});
  const NonNegativeMeasure m = cp_measure(2, alg, MatrixAlgebra::full(3), 2, 5);
  const PositivityReport r =
      validate_nonneg(m, PositivityPolicy::ChoiCertificate);
  CHECK(r.pass);
  CHECK(r.sound);
  for (const AtomPositivity& ap : r.atoms) {
    CHECK(ap.status == AtomPositivityStatus::PassCompletelyPositive);
    CHECK(ap.hermiticity_defect < 1e-12);
  }
}

TEST_CASE("validate_nonneg: transpose map is positive but not CP") {
  const MatrixAlgebra alg({2});
  const NonNegativeMeasure m = transpose_measure(1, alg, 7);

  const PositivityReport choi_only =
      validate_nonneg(m, PositivityPolicy::ChoiCertificate);
  CHECK_FALSE(choi_only.pass);
  CHECK_FALSE(choi_only.sound);
  CHECK(choi_only.atoms[0].status == AtomPositivityStatus::Inconclusive);

  const PositivityReport searched =
      validate_nonneg(m, PositivityPolicy::ChoiThenRankOne);
  CHECK(searched.pass);
  CHECK(searched.atoms[0].status == AtomPositivityStatus::PassSearch);
  CHECK(searched.worst_margin >= -1e-9);
}

TEST_CASE("validate_nonneg: scaled reduction map fails with a witness") {
  // m(A) = tr(A) I/(n-1) - A on M_3 sends vv* to I/2 - vv*, which has
  // eigenvalue -1/2: not positive, witness any unit vector.
  const int n = 3;
  const MatrixAlgebra alg({n});
  const FiniteMeasurableSpace space(1);
  std::vector<std::vector<AlgebraElement>> maps(1);
  for (const auto& [r, c] : alg.pattern_units()) {
    ComplexMatrix unit = ComplexMatrix::Zero(n, n);
    unit(r, c) = 1.0;
    const ComplexMatrix img =
        unit.trace() / Complex(n - 1, 0) * ComplexMatrix::Identity(n, n) -
        unit;
    maps[0].push_back(AlgebraElement(alg, img));
  }
  const NonNegativeMeasure m(space, alg, alg, std::move(maps));
  const PositivityReport r =
      validate_nonneg(m, PositivityPolicy::ChoiThenRankOne);
  CHECK_FALSE(r.pass);
  REQUIRE(r.atoms[0].status == AtomPositivityStatus::Fail);
  REQUIRE(r.atoms[0].witness.has_value());
  CHECK(std::abs(r.atoms[0].witness->margin + 0.5) < 1e-6);

  // Re-evaluate the witness independently: the rejection is sound.
  const ComplexVector& v = r.atoms[0].witness->vector;
  const ComplexMatrix vv = v * v.adjoint();
  const ComplexMatrix img =
      vv.trace() / Complex(n - 1, 0) * ComplexMatrix::Identity(n, n) - vv;
  CHECK(is_psd(img).margin < -0.4);
}

TEST_CASE("validate_nonneg rejects maps that break hermiticity preservation") {
  const MatrixAlgebra alg({2});
  const FiniteMeasurableSpace space(1);
  std::vector<std::vector<AlgebraElement>> maps(1);
  for (const auto& [r, c] : alg.pattern_units()) {
    // m(E_rc) = E_rc except m(E_01) gets an asymmetric bump.
    ComplexMatrix img = ComplexMatrix::Zero(2, 2);
    img(r, c) = 1.0;
    if (r == 0 && c == 1) img(1, 0) = 0.3;
    maps[0].push_back(AlgebraElement(alg, img));
  }
  const NonNegativeMeasure m(space, alg, alg, std::move(maps));
  const PositivityReport r =
      validate_nonneg(m, PositivityPolicy::ChoiThenRankOne);
  CHECK_FALSE(r.pass);
  CHECK(r.atoms[0].hermiticity_defect > 0.2);
}

TEST_CASE("semivariation of the identity-map measure") {
  for (int k = 1; k <= 3; ++k) {
    const NonNegativeMeasure m = identity_measure(k, MatrixAlgebra({2}));
    const SemivariationBounds b = semivariation(m);
    CHECK(b.lower >= k - 1e-6);
    CHECK(std::abs(b.upper - 4.0 * k) < 1e-12);
    CHECK(b.lower <= b.upper + 1e-6);
  }
}

TEST_CASE("semivariation of the zero measure is (0, 0)") {
  const MatrixAlgebra alg({2});
  const FiniteMeasurableSpace space(2);
  std::vector<std::vector<AlgebraElement>> maps(
      2, std::vector<AlgebraElement>(alg.unit_count(),
                                     AlgebraElement::zero(alg)));
  const NonNegativeMeasure m(space, alg, alg, std::move(maps));
  const SemivariationBounds b = semivariation(m);
  CHECK(b.lower == 0.0);
  CHECK(b.upper == 0.0);
}

TEST_CASE("semivariation bounds on random CP measures") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const NonNegativeMeasure m =
        cp_measure(3, MatrixAlgebra({2}), MatrixAlgebra::full(2), 2, seed);
    const SemivariationBounds b = semivariation(m);
    CHECK(b.lower <= b.upper + 1e-6);
    CHECK(b.lower >= 0.0);
  }
}

TEST_CASE("semivariation rejects oversized exhaustive instances") {
  const NonNegativeMeasure m = identity_measure(13, MatrixAlgebra({1}));
  CHECK_THROWS_AS(semivariation(m), IntractablePartitionCount);
  // The structured strategy still produces bounds.
  SemivariationOptions opt;
  opt.strategy = SemivariationStrategy::Structured;
  const SemivariationBounds b = semivariation(m, opt);
  CHECK(b.lower >= 13.0 - 1e-6);
}

TEST_CASE("pairing realizes the trace functional") {
  const MatrixAlgebra alg({2});
  const NonNegativeMeasure m = identity_measure(3, alg);
  Rng rng(13);
  const AlgebraElement a = sample_hermitian(alg, rng);

  const ScalarAtomMeasure zero =
      pairing(TracePairing{AlgebraElement::zero(alg)}, m, a);
  for (const Complex& z : zero.atom_values) CHECK(std::abs(z) == 0.0);

  const ScalarAtomMeasure tr =
      pairing(TracePairing{AlgebraElement::identity(alg)}, m, a);
  for (const Complex& z : tr.atom_values) {
    CHECK(std::abs(z - a.matrix().trace()) < 1e-13);
  }
  CHECK(std::abs(tr.total_variation() -
                 3.0 * std::abs(a.matrix().trace())) < 1e-12);

  // Positive weight against PSD operators gives nonnegative real values.
  const AlgebraElement w = sample_positive(alg, 21);
  const AlgebraElement psd = sample_positive(alg, 22);
  const ScalarAtomMeasure pos = pairing(TracePairing{w}, m, psd);
  for (const Complex& z : pos.atom_values) {
    CHECK(std::abs(z.imag()) < 1e-13);
    CHECK(z.real() >= -1e-12);
  }
}

TEST_CASE("pairing is linear per atom") {
  const MatrixAlgebra alg({2, 1});
  const NonNegativeMeasure m = cp_measure(2, alg, MatrixAlgebra::full(2), 2, 31);
  Rng rng(37);
  const AlgebraElement a = sample_element(alg, rng);
  const AlgebraElement b = sample_element(alg, rng);
  const Complex alpha(0.3, -1.1);
  const Complex beta(-0.7, 0.2);
  const TracePairing t{AlgebraElement(MatrixAlgebra::full(2),
                                      mat({{0.2, 0.1}, {0.1, -0.4}}))};

  const ScalarAtomMeasure lhs = pairing(t, m, alpha * a + beta * b);
  const ScalarAtomMeasure ra = pairing(t, m, a);
  const ScalarAtomMeasure rb = pairing(t, m, b);
  for (std::size_t x = 0; x < lhs.atom_values.size(); ++x) {
    CHECK(std::abs(lhs.atom_values[x] -
                   (alpha * ra.atom_values[x] + beta * rb.atom_values[x])) <=
          1e-10);
  }
}

TEST_CASE("pairing additivity over disjoint sets") {
  const MatrixAlgebra alg({2});
  const NonNegativeMeasure m = identity_measure(4, alg);
  Rng rng(41);
  const AlgebraElement a = sample_element(alg, rng);
  const ScalarAtomMeasure s =
      pairing(TracePairing{sample_hermitian(alg, rng)}, m, a);
  const FiniteMeasurableSpace& space = m.space();
  const MeasurableSet d1 = MeasurableSet::of(space, {0, 2});
  const MeasurableSet d2 = MeasurableSet::of(space, {1});
  CHECK(std::abs(s.value(d1.unite(d2)) - (s.value(d1) + s.value(d2))) <=
        1e-14);
}
