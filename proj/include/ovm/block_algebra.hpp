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

#include <cstdint>
#include <utility>
#include <vector>

#include "ovm/kernel.hpp"
#include "ovm/random.hpp"

namespace ovm {

/// Block-diagonal *-subalgebra of the n x n complex matrices, the
/// finite-dimensional stand-in for a von Neumann algebra. Blocks are kept
/// multiplicity-free; multiplicities only reappear inside representation
/// blueprints.
class MatrixAlgebra {
 public:
  explicit MatrixAlgebra(std::vector<int> blocks);

  /// The full matrix algebra M_dim.
  static MatrixAlgebra full(int dim);

  int ambient_dim() const { return ambient_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_offset(int index) const { return offsets_[index]; }

  /// Matrix-unit coordinates of the block pattern: block by block, row-major
  /// within each block. This order is the canonical basis order used by all
  /// basis-stored maps and by the instance file format.
  const std::vector<std::pair<int, int>>& pattern_units() const {
    return units_;
  }
  int unit_count() const { return static_cast<int>(units_.size()); }

  /// Largest magnitude of any entry outside the block pattern.
  double pattern_defect(const ComplexMatrix& m) const;

  /// Copy of m with everything outside the block pattern set to exact zero.
  ComplexMatrix masked(const ComplexMatrix& m) const;

  friend bool operator==(const MatrixAlgebra& a, const MatrixAlgebra& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const MatrixAlgebra& a, const MatrixAlgebra& b) {
    return !(a == b);
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  std::vector<std::pair<int, int>> units_;
  int ambient_ = 0;
};

/// A matrix constrained to an algebra's block pattern. Construction verifies
/// the pattern (within tolerance) and then zeroes the off-pattern entries
/// exactly, so algebra arithmetic stays closed in floating point.
class AlgebraElement {
 public:
  AlgebraElement(MatrixAlgebra algebra, ComplexMatrix matrix,
                 double pattern_tol = 1e-9);

  static AlgebraElement zero(const MatrixAlgebra& algebra);
  static AlgebraElement identity(const MatrixAlgebra& algebra);
  /// Pattern matrix unit E_rc (global coordinates must lie inside one block).
  static AlgebraElement unit(const MatrixAlgebra& algebra, int row, int col);

  const MatrixAlgebra& algebra() const { return algebra_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return algebra_.ambient_dim(); }

  AlgebraElement adjoint() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(Complex scalar, AlgebraElement a) {
    return a *= scalar;
  }
  friend AlgebraElement operator*(AlgebraElement a, Complex scalar) {
    return a *= scalar;
  }
  /// Algebra product; both factors must live in the same algebra.
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);

 private:
  struct Unchecked {};
  AlgebraElement(Unchecked, MatrixAlgebra algebra, ComplexMatrix matrix)
      : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {}

  MatrixAlgebra algebra_;
  ComplexMatrix matrix_;

  friend AlgebraElement element_unchecked(MatrixAlgebra, ComplexMatrix);
};

/// Internal fast path: caller guarantees the matrix is already in pattern.
AlgebraElement element_unchecked(MatrixAlgebra algebra, ComplexMatrix matrix);

double operator_norm(const AlgebraElement& a);
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b,
                          const char* where);

struct SpectralTerm {
  double eigenvalue = 0.0;
  AlgebraElement projection;
};

/// Finite spectral decomposition sum_k lambda_k P_k with distinct clustered
/// eigenvalues and mutually orthogonal projections summing to the identity.
struct SpectralDecomposition {
  std::vector<SpectralTerm> terms;

  ComplexMatrix reconstruct(int dim) const;
};

/// Level-l spectral binning S_l(A) with ||A - S_l(A)|| <= 1/l. Doubling the
/// level refines the binning.
struct RiemannSum {
  int level = 1;
  SpectralDecomposition terms;
  double error_bound = 1.0;

  AlgebraElement value(const MatrixAlgebra& algebra) const;
};

/// A = re + i*im with both parts Hermitian: re = (A + A*)/2, im = i(A* - A)/2.
std::pair<AlgebraElement, AlgebraElement> cartesian_parts(
    const AlgebraElement& a);

/// Hermitian A = plus - minus with plus, minus PSD and plus*minus ~ 0.
/// Eigenvalues within tol.absolute of zero are clamped to zero first.
std::pair<AlgebraElement, AlgebraElement> jordan_parts(const AlgebraElement& a,
                                                       const Tolerance& tol = {});

SpectralDecomposition spectral_decomposition(const AlgebraElement& a,
                                             const Tolerance& tol = {});

RiemannSum riemann_sum(const AlgebraElement& a, int level,
                       const Tolerance& tol = {});

/// PSD by construction (per-block G*G), rescaled to unit operator norm.
AlgebraElement sample_positive(const MatrixAlgebra& algebra,
                               std::uint64_t seed);
AlgebraElement sample_positive(const MatrixAlgebra& algebra, Rng& rng);

/// Hermitian projection: per-block unitary conjugation of a random 0/1
/// diagonal.
AlgebraElement sample_projection(const MatrixAlgebra& algebra,
                                 std::uint64_t seed);
AlgebraElement sample_projection(const MatrixAlgebra& algebra, Rng& rng);

AlgebraElement sample_hermitian(const MatrixAlgebra& algebra,
                                std::uint64_t seed);
AlgebraElement sample_hermitian(const MatrixAlgebra& algebra, Rng& rng);

/// General (non-Hermitian) element with Gaussian entries in the pattern.
AlgebraElement sample_element(const MatrixAlgebra& algebra, Rng& rng);

/// Block-diagonal unitary element.
AlgebraElement sample_unitary_element(const MatrixAlgebra& algebra, Rng& rng);

/// Pair of commuting projections drawn from a common per-block eigenbasis.
std::pair<AlgebraElement, AlgebraElement> sample_commuting_projections(
    const MatrixAlgebra& algebra, Rng& rng);

}  // namespace ovm
