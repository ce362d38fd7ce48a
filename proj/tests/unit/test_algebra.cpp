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

#include "ovm/block_algebra.hpp"
#include "test_helpers.hpp"

using namespace ovm;
using ovm::test::dist;
using ovm::test::mat;

namespace {
const Complex I1(0.0, 1.0);

AlgebraElement full_elem(const ComplexMatrix& m) {
  return AlgebraElement(MatrixAlgebra::full(static_cast<int>(m.rows())), m);
}
}  // namespace

TEST_CASE("MatrixAlgebra pattern bookkeeping") {
  const MatrixAlgebra alg({2, 1});
  CHECK(alg.ambient_dim() == 3);
  CHECK(alg.block_count() == 2);
  CHECK(alg.block_offset(1) == 2);
  CHECK(alg.unit_count() == 5);  // 2^2 + 1^2

  ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
  bad(0, 2) = 0.5;
  CHECK(alg.pattern_defect(bad) == 0.5);
  CHECK_THROWS_AS(AlgebraElement(alg, bad), PatternViolation);
  CHECK_THROWS_AS(MatrixAlgebra(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraElement::unit(alg, 0, 2), PatternViolation);
}

TEST_CASE("algebra arithmetic stays in pattern and checks domains") {
  const MatrixAlgebra alg({2, 1});
  Rng rng(3);
  const AlgebraElement a = sample_element(alg, rng);
  const AlgebraElement b = sample_element(alg, rng);
  const AlgebraElement prod = a * b;
  CHECK(alg.pattern_defect(prod.matrix()) == 0.0);
  CHECK(dist(prod.matrix(), a.matrix() * b.matrix()) == 0.0);

  const MatrixAlgebra other({3});
  const AlgebraElement c = AlgebraElement::identity(other);
  CHECK_THROWS_AS(a + c, DomainMismatch);
}

TEST_CASE("cartesian_parts of a Hermitian element") {
  const MatrixAlgebra alg = MatrixAlgebra::full(2);
  Rng rng(11);
  const AlgebraElement a = sample_hermitian(alg, rng);
  const auto [re, im] = cartesian_parts(a);
  CHECK(dist(re.matrix(), a.matrix()) < 1e-15);
  CHECK(im.matrix().norm() < 1e-15);
}

TEST_CASE("cartesian_parts of [[0,2i],[0,0]]") {
  const AlgebraElement a = full_elem(mat({{0.0, 2.0 * I1}, {0.0, 0.0}}));
  const auto [re, im] = cartesian_parts(a);
  CHECK(dist(re.matrix(), mat({{0.0, I1}, {-I1, 0.0}})) < 1e-15);
  CHECK(dist(im.matrix(), mat({{0.0, 1.0}, {1.0, 0.0}})) < 1e-15);
  // A = re + i*im exactly.
  CHECK(dist(re.matrix() + I1 * im.matrix(), a.matrix()) < 1e-15);
}

TEST_CASE("cartesian_parts of iI") {
  const AlgebraElement a = full_elem(I1 * ComplexMatrix::Identity(2, 2));
  const auto [re, im] = cartesian_parts(a);
  CHECK(re.matrix().norm() < 1e-15);
  CHECK(dist(im.matrix(), ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("cartesian recombination on random elements") {
  const MatrixAlgebra alg({2, 2, 1});
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = sample_element(alg, rng);
    const auto [re, im] = cartesian_parts(a);
    CHECK(hermitian_defect(re.matrix()) < 1e-14);
    CHECK(hermitian_defect(im.matrix()) < 1e-14);
    CHECK(dist(re.matrix() + I1 * im.matrix(), a.matrix()) < 1e-14);
  }
}

TEST_CASE("jordan_parts of a diagonal matrix") {
  const AlgebraElement a = full_elem(mat({{2.0, 0.0}, {0.0, -3.0}}));
  const auto [plus, minus] = jordan_parts(a);
  CHECK(dist(plus.matrix(), mat({{2.0, 0.0}, {0.0, 0.0}})) < 1e-13);
  CHECK(dist(minus.matrix(), mat({{0.0, 0.0}, {0.0, 3.0}})) < 1e-13);
}

TEST_CASE("jordan_parts of the flip matrix") {
  // Eigenvalues +-1 with eigenvectors (1,1)/sqrt2, (1,-1)/sqrt2, so
  // A_+ = [[.5,.5],[.5,.5]] and A_- = [[.5,-.5],[-.5,.5]].
  const AlgebraElement a = full_elem(mat({{0.0, 1.0}, {1.0, 0.0}}));
  const auto [plus, minus] = jordan_parts(a);
  CHECK(dist(plus.matrix(), mat({{0.5, 0.5}, {0.5, 0.5}})) < 1e-13);
  CHECK(dist(minus.matrix(), mat({{0.5, -0.5}, {-0.5, 0.5}})) < 1e-13);
}

TEST_CASE("jordan_parts of a PSD element returns (A, 0)") {
  const MatrixAlgebra alg({2, 1});
  const AlgebraElement a = sample_positive(alg, 7);
  const auto [plus, minus] = jordan_parts(a);
  CHECK(dist(plus.matrix(), a.matrix()) < 1e-9);
  CHECK(minus.matrix().norm() < 1e-9);
}

TEST_CASE("jordan_parts invariants on random Hermitian elements") {
  const MatrixAlgebra alg({3, 2});
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const AlgebraElement a = sample_hermitian(alg, rng);
    const auto [plus, minus] = jordan_parts(a);
    CHECK(is_psd(plus.matrix()).margin >= -1e-12);
    CHECK(is_psd(minus.matrix()).margin >= -1e-12);
    CHECK(dist(plus.matrix() - minus.matrix(), a.matrix()) < 1e-9);
    CHECK(operator_norm(plus * minus) < 1e-12);
    CHECK(operator_norm(plus) <= operator_norm(a) + 1e-10);
    CHECK(operator_norm(minus) <= operator_norm(a) + 1e-10);
  }
  CHECK_THROWS_AS(jordan_parts(sample_element(alg, rng)), NotHermitian);
}

TEST_CASE("Jordan identity (A+B)_+ + A_- + B_- = (A+B)_- + A_+ + B_+") {
  const MatrixAlgebra alg({2, 2});
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraElement a = sample_hermitian(alg, rng);
    const AlgebraElement b = sample_hermitian(alg, rng);
    const auto [ap, am] = jordan_parts(a);
    const auto [bp, bm] = jordan_parts(b);
    const auto [sp, sm] = jordan_parts(a + b);
    const AlgebraElement lhs = sp + am + bm;
    const AlgebraElement rhs = sm + ap + bp;
    CHECK(operator_norm(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("spectral_decomposition basics") {
  const SpectralDecomposition id_sd =
      spectral_decomposition(full_elem(ComplexMatrix::Identity(3, 3)));
  REQUIRE(id_sd.terms.size() == 1);
  CHECK(std::abs(id_sd.terms[0].eigenvalue - 1.0) < 1e-14);
  CHECK(dist(id_sd.terms[0].projection.matrix(),
             ComplexMatrix::Identity(3, 3)) < 1e-13);

  const SpectralDecomposition sd = spectral_decomposition(
      full_elem(mat({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 4.0}})));
  REQUIRE(sd.terms.size() == 2);
  CHECK(std::abs(sd.terms[0].eigenvalue - 1.0) < 1e-14);
  CHECK(std::abs(sd.terms[1].eigenvalue - 4.0) < 1e-14);
  CHECK(dist(sd.terms[0].projection.matrix(),
             mat({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}})) <
        1e-13);
  CHECK(dist(sd.terms[1].projection.matrix(),
             mat({{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}})) <
        1e-13);
}

TEST_CASE("spectral_decomposition of the flip matrix") {
  const SpectralDecomposition sd =
      spectral_decomposition(full_elem(mat({{0.0, 1.0}, {1.0, 0.0}})));
  REQUIRE(sd.terms.size() == 2);
  CHECK(std::abs(sd.terms[0].eigenvalue + 1.0) < 1e-13);
  CHECK(std::abs(sd.terms[1].eigenvalue - 1.0) < 1e-13);
  CHECK(dist(sd.terms[0].projection.matrix(),
             mat({{0.5, -0.5}, {-0.5, 0.5}})) < 1e-13);
  CHECK(dist(sd.terms[1].projection.matrix(), mat({{0.5, 0.5}, {0.5, 0.5}})) <
        1e-13);
}

TEST_CASE("spectral_decomposition invariants on random Hermitian elements") {
  const MatrixAlgebra alg({2, 3});
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = sample_hermitian(alg, rng);
    const SpectralDecomposition sd = spectral_decomposition(a);
    ComplexMatrix sum_proj = ComplexMatrix::Zero(a.dim(), a.dim());
    for (std::size_t i = 0; i < sd.terms.size(); ++i) {
      const ComplexMatrix& p = sd.terms[i].projection.matrix();
      CHECK(operator_norm(ComplexMatrix(p * p - p)) < 1e-12);
      CHECK(hermitian_defect(p) < 1e-12);
      for (std::size_t j = i + 1; j < sd.terms.size(); ++j) {
        CHECK(operator_norm(
                  ComplexMatrix(p * sd.terms[j].projection.matrix())) < 1e-12);
      }
      sum_proj += p;
    }
    CHECK(dist(sum_proj, ComplexMatrix::Identity(a.dim(), a.dim())) < 1e-12);
    CHECK(dist(sd.reconstruct(a.dim()), a.matrix()) < 1e-12);
  }
}

TEST_CASE("spectral_decomposition of a projection has spectrum in {0,1}") {
  const MatrixAlgebra alg({3, 2});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const AlgebraElement p = sample_projection(alg, seed);
    const SpectralDecomposition sd = spectral_decomposition(p);
    for (const SpectralTerm& t : sd.terms) {
      CHECK((std::abs(t.eigenvalue) < 1e-9 ||
             std::abs(t.eigenvalue - 1.0) < 1e-9));
    }
  }
}

TEST_CASE("riemann_sum error bound and convergence") {
  const MatrixAlgebra alg({3, 2});
  const AlgebraElement a = sample_hermitian(alg, 53);
  for (int level = 1; level <= 1024; level *= 2) {
    const RiemannSum rs = riemann_sum(a, level);
    CHECK(rs.error_bound == 1.0 / level);
    CHECK(operator_norm(a - rs.value(alg)) <= 1.0 / level);
  }
}

TEST_CASE("riemann_sum on an aligned diagonal spectrum is exact") {
  const AlgebraElement a = full_elem(mat({{0.3, 0.0}, {0.0, 0.7}}));
  const RiemannSum rs = riemann_sum(a, 10);
  CHECK(operator_norm(a - rs.value(a.algebra())) < 1e-12);
}

TEST_CASE("riemann_sum coefficients are nonnegative on the positive cone") {
  const MatrixAlgebra alg({2, 2});
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const AlgebraElement a = sample_positive(alg, seed);
    for (int level : {1, 3, 10}) {
      const RiemannSum rs = riemann_sum(a, level);
      for (const SpectralTerm& t : rs.terms.terms) {
        CHECK(t.eigenvalue >= 0.0);
      }
    }
  }
}

TEST_CASE("riemann_sum at level 1 is within 1 of an integer-spectrum matrix") {
  const AlgebraElement a =
      full_elem(mat({{2.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 5.0}}));
  const RiemannSum rs = riemann_sum(a, 1);
  CHECK(operator_norm(a - rs.value(a.algebra())) <= 1.0);
}

TEST_CASE("doubling the riemann_sum level refines the binning") {
  const MatrixAlgebra alg({4});
  const AlgebraElement a = sample_hermitian(alg, 61);
  for (int level : {1, 2, 4, 8}) {
    const RiemannSum coarse = riemann_sum(a, level);
    const RiemannSum fine = riemann_sum(a, 2 * level);
    // Every fine projection is dominated by exactly one coarse projection.
    for (const SpectralTerm& f : fine.terms.terms) {
      int dominating = 0;
      for (const SpectralTerm& c : coarse.terms.terms) {
        const ComplexMatrix prod =
            c.projection.matrix() * f.projection.matrix();
        if (dist(prod, f.projection.matrix()) < 1e-10) ++dominating;
      }
      CHECK(dominating == 1);
    }
  }
}

TEST_CASE("sample_positive yields unit-norm PSD elements deterministically") {
  const MatrixAlgebra scalar({1});
  const AlgebraElement s = sample_positive(scalar, 99);
  CHECK(std::abs(s.matrix()(0, 0).imag()) == 0.0);
  CHECK(s.matrix()(0, 0).real() >= 0.0);

  const MatrixAlgebra alg({2, 3});
  const AlgebraElement a = sample_positive(alg, 4);
  const AlgebraElement b = sample_positive(alg, 4);
  CHECK(dist(a.matrix(), b.matrix()) == 0.0);
  CHECK(is_psd(a.matrix()).margin >= -1e-12);
  CHECK(std::abs(operator_norm(a) - 1.0) < 1e-12);
}

TEST_CASE("sample_projection yields projections deterministically") {
  const MatrixAlgebra alg({2, 2, 1});
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const AlgebraElement p = sample_projection(alg, seed);
    const ComplexMatrix& m = p.matrix();
    CHECK(operator_norm(ComplexMatrix(m * m - m)) <= 1e-12);
    CHECK(hermitian_defect(m) <= 1e-12);
    CHECK(alg.pattern_defect(m) == 0.0);
  }
  const AlgebraElement p1 = sample_projection(alg, 3);
  const AlgebraElement p2 = sample_projection(alg, 3);
  CHECK(dist(p1.matrix(), p2.matrix()) == 0.0);
}

TEST_CASE("sample_commuting_projections commute and multiply to a projection") {
  const MatrixAlgebra alg({3, 2});
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [p, q] = sample_commuting_projections(alg, rng);
    CHECK(operator_norm(p * q - q * p) < 1e-12);
    const AlgebraElement pq = p * q;
    CHECK(operator_norm(pq * pq - pq) < 1e-12);
  }
}
