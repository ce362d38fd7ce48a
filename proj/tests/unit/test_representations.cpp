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

#include "ovm/representations.hpp"
#include "test_helpers.hpp"

using namespace ovm;
using ovm::test::dist;
using ovm::test::mat;

namespace {

Representation scale_representation(const Representation& rep, Complex c) {
  std::vector<std::vector<AlgebraElement>> action(rep.space().atom_count());
  for (int x = 0; x < rep.space().atom_count(); ++x) {
    for (int u = 0; u < rep.domain().unit_count(); ++u) {
      action[x].push_back(c * rep.basis_action(x, u));
    }
  }
  return Representation(rep.space(), rep.domain(), rep.codomain(),
                        std::move(action));
}

Representation transpose_representation(const Representation& rep) {
  std::vector<std::vector<AlgebraElement>> action(rep.space().atom_count());
  for (int x = 0; x < rep.space().atom_count(); ++x) {
    for (int u = 0; u < rep.domain().unit_count(); ++u) {
      action[x].push_back(element_unchecked(
          rep.codomain(), rep.basis_action(x, u).matrix().transpose()));
    }
  }
  return Representation(rep.space(), rep.domain(), rep.codomain(),
                        std::move(action));
}

}  // namespace

TEST_CASE("generate_representation: single atom, trivial intertwiner") {
  const FiniteMeasurableSpace space(1);
  const MatrixAlgebra domain = MatrixAlgebra::full(3);
  const Representation rho =
      generate_representation(identity_blueprint(space, domain));
  CHECK(rho.certified());
  Rng rng(3);
  const AlgebraElement a = sample_element(domain, rng);
  // rho is the identity map on M_3.
  CHECK(dist(rho.apply_atom(0, a).matrix(), a.matrix()) < 1e-14);
}

TEST_CASE("generate_representation: scalar case gives diagonal maps") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra domain({1});
  const Representation rho =
      generate_representation(identity_blueprint(space, domain));
  // rho(f) = diag(f(0), f(1)).
  const ScalarFunction f(space, {Complex(0.5, 0.25), Complex(-2.0, 1.0)});
  const OperatorFunction of = OperatorFunction::tensor(
      f, AlgebraElement::identity(domain));
  const ComplexMatrix expected =
      mat({{Complex(0.5, 0.25), 0.0}, {0.0, Complex(-2.0, 1.0)}});
  CHECK(dist(rho.apply(of).matrix(), expected) < 1e-14);
}

TEST_CASE("generate_representation rejects degenerate blueprints") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra domain({2});
  RepresentationBlueprint bp{space, domain, {0, 0}, ComplexMatrix()};
  CHECK_THROWS_AS(generate_representation(bp), EmptyBlueprint);

  RepresentationBlueprint skew{space, domain, {1, 0}, ComplexMatrix::Zero(2, 2)};
  CHECK_THROWS_AS(generate_representation(skew), BadConfig);
}

TEST_CASE("certify_representation on generated representations") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Representation rho = generate_representation(random_blueprint(seed));
    const CertificationReport r = certify_representation(rho);
    CHECK(r.pass);
    CHECK(r.unitality_defect <= 1e-10);
    CHECK(r.multiplicativity_defect <= 1e-10);
    CHECK(r.star_defect <= 1e-10);
    // Unital *-representations are contractive and attain norm 1 at 1 (x) id.
    CHECK(r.norm_estimate <= 1.0 + 1e-6);
    CHECK(r.norm_estimate >= 1.0 - 1e-6);
  }
}

TEST_CASE("certify_representation flags a doubled representation") {
  Representation rho = generate_representation(random_blueprint(11));
  Representation doubled = scale_representation(rho, Complex(2.0, 0.0));
  const CertificationReport r = certify_representation(doubled);
  CHECK_FALSE(r.pass);
  CHECK(std::abs(r.unitality_defect - 1.0) <= 1e-9);  // ||2 id - id||
}

TEST_CASE("certify_representation flags a transpose-composed representation") {
  // Transposition reverses products, so multiplicativity must fail for a
  // noncommutative domain.
  const FiniteMeasurableSpace space(1);
  const MatrixAlgebra domain = MatrixAlgebra::full(2);
  RepresentationBlueprint bp = identity_blueprint(space, domain);
  Rng rng(13);
  bp.intertwiner = random_unitary(rng, bp.total_dim());
  Representation rho = generate_representation(bp);
  Representation transposed = transpose_representation(rho);
  const CertificationReport r = certify_representation(transposed);
  CHECK_FALSE(r.pass);
  CHECK(r.multiplicativity_defect > 0.1);
}

TEST_CASE("rep_to_measure: scalar example splits the diagonal") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra domain({1});
  const Representation rho =
      generate_representation(identity_blueprint(space, domain));
  const NonNegativeSpectralMeasure m = rep_to_measure(rho);
  const AlgebraElement one = AlgebraElement::identity(domain);
  CHECK(dist(m.apply_atom(0, one).matrix(), mat({{1.0, 0.0}, {0.0, 0.0}})) <
        1e-14);
  CHECK(dist(m.apply_atom(1, one).matrix(), mat({{0.0, 0.0}, {0.0, 1.0}})) <
        1e-14);
}

TEST_CASE("rep_to_measure validates and satisfies the product law") {
  for (std::uint64_t seed = 21; seed <= 24; ++seed) {
    const Representation rho =
        generate_representation(random_blueprint(seed));
    const NonNegativeSpectralMeasure m = rep_to_measure(rho);
    NonNegSpectralOptions opts;
    opts.include_noncommuting = true;  // the law holds literally for reps
    const NonNegSpectralReport r = validate_nonneg_spectral(m, opts);
    CHECK(r.pass);
    CHECK(normalization_defect(m) <= 1e-10);

    // Off-atom products vanish.
    Rng rng(seed);
    const AlgebraElement p = sample_projection(m.domain(), rng);
    const AlgebraElement q = sample_projection(m.domain(), rng);
    if (m.space().atom_count() >= 2) {
      CHECK(operator_norm(m.apply_atom(0, p) * m.apply_atom(1, q)) <= 1e-10);
    }
  }
}

TEST_CASE("measure_to_rep inverts rep_to_measure") {
  for (std::uint64_t seed = 31; seed <= 36; ++seed) {
    const Representation rho =
        generate_representation(random_blueprint(seed));
    const NonNegativeSpectralMeasure m = rep_to_measure(rho);
    const Representation back = measure_to_rep(m);
    double defect = 0.0;
    for (int x = 0; x < rho.space().atom_count(); ++x) {
      for (int u = 0; u < rho.domain().unit_count(); ++u) {
        defect = std::max(defect, operator_norm(rho.basis_action(x, u) -
                                                back.basis_action(x, u)));
      }
    }
    CHECK(defect <= 1e-9);
    // Normalization transfers.
    const OperatorFunction one = OperatorFunction::constant(
        rho.space(), AlgebraElement::identity(rho.domain()));
    CHECK(operator_norm(back.apply(one) -
                        AlgebraElement::identity(rho.codomain())) <= 1e-10);
  }
}

TEST_CASE("measure_to_rep rejects non-normalized and corrupted measures") {
  const Representation rho = generate_representation(random_blueprint(41));
  const NonNegativeSpectralMeasure m = rep_to_measure(rho);

  // Halving breaks normalization.
  std::vector<std::vector<AlgebraElement>> halved(m.space().atom_count());
  for (int x = 0; x < m.space().atom_count(); ++x) {
    for (int u = 0; u < m.domain().unit_count(); ++u) {
      halved[x].push_back(Complex(0.5, 0.0) * m.basis_value(x, u));
    }
  }
  const NonNegativeSpectralMeasure bad(NonNegativeMeasure(
      m.space(), m.domain(), m.codomain(), std::move(halved)));
  CHECK_THROWS_AS(measure_to_rep(bad), InvalidMeasure);

  // A small non-spectral perturbation of one basis entry is caught by
  // validation before any round trip.
  std::vector<std::vector<AlgebraElement>> noisy(m.space().atom_count());
  for (int x = 0; x < m.space().atom_count(); ++x) {
    for (int u = 0; u < m.domain().unit_count(); ++u) {
      AlgebraElement v = m.basis_value(x, u);
      if (x == 0 && u == 0) {
        ComplexMatrix bump =
            ComplexMatrix::Zero(v.dim(), v.dim());
        bump(0, 0) = Complex(1e-3, 0.0);
        v = element_unchecked(m.codomain(),
                              ComplexMatrix(v.matrix() + bump));
      }
      noisy[x].push_back(v);
    }
  }
  const NonNegativeSpectralMeasure perturbed(NonNegativeMeasure(
      m.space(), m.domain(), m.codomain(), std::move(noisy)));
  const NonNegSpectralReport r = validate_nonneg_spectral(perturbed);
  CHECK_FALSE(r.pass);
}

TEST_CASE("roundtrip_defect stays below 1e-8 on seeded instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RoundTripDefects d = roundtrip_defect(seed);
    CHECK(d.rep_side <= 1e-8);
    CHECK(d.measure_side <= 1e-8);
  }
}

TEST_CASE("identity blueprint round trip is numerically exact") {
  const FiniteMeasurableSpace space(2);
  const MatrixAlgebra domain({2});
  const Representation rho =
      generate_representation(identity_blueprint(space, domain));
  const Representation back = measure_to_rep(rep_to_measure(rho));
  for (int x = 0; x < 2; ++x) {
    for (int u = 0; u < domain.unit_count(); ++u) {
      CHECK(operator_norm(rho.basis_action(x, u) -
                          back.basis_action(x, u)) <= 1e-12);
    }
  }
}

TEST_CASE("rho_P factorizations are scalar *-representations") {
  const Representation rho = generate_representation(random_blueprint(51));
  Rng rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const AlgebraElement p = sample_projection(rho.domain(), rng);
    // f |-> rho(f (x) P) must be multiplicative and *-preserving.
    std::vector<Complex> fv, gv;
    for (int x = 0; x < rho.space().atom_count(); ++x) {
      fv.push_back(rng.complex_gaussian());
      gv.push_back(rng.complex_gaussian());
    }
    const ScalarFunction f(rho.space(), fv);
    const ScalarFunction g(rho.space(), gv);
    const auto lift = [&](const ScalarFunction& s) {
      return rho.apply(OperatorFunction::tensor(s, p));
    };
    const double mult_defect = operator_norm(
        lift(f.pointwise_product(g)) - lift(f) * lift(g));
    CHECK(mult_defect <= 1e-9);

    std::vector<Complex> conj_v;
    for (const Complex& z : fv) conj_v.push_back(std::conj(z));
    const ScalarFunction f_conj(rho.space(), conj_v);
    CHECK(operator_norm(lift(f_conj) - lift(f).adjoint()) <= 1e-9);
  }
}

TEST_CASE("boundedness witness equals one for generated representations") {
  Representation rho = generate_representation(random_blueprint(61));
  const CertificationReport r = certify_representation(rho, 16, 63);
  CHECK(std::abs(r.norm_estimate - 1.0) <= 1e-6);
}

TEST_CASE("projection restrictions sum to a projection over the full space") {
  const Representation rho = generate_representation(random_blueprint(71));
  const NonNegativeSpectralMeasure m = rep_to_measure(rho);
  Rng rng(73);
  for (int trial = 0; trial < 8; ++trial) {
    const AlgebraElement p = sample_projection(m.domain(), rng);
    const AlgebraElement total =
        m.evaluate(MeasurableSet::full(m.space()), p);
    CHECK(operator_norm(total * total - total) <= 1e-9);
  }
}
