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

#include "ovm/block_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ovm {

MatrixAlgebra::MatrixAlgebra(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("MatrixAlgebra: block list is empty");
  }
  for (int b : blocks_) {
    if (b < 1) {
      throw std::invalid_argument("MatrixAlgebra: block size must be >= 1");
    }
    offsets_.push_back(ambient_);
    ambient_ += b;
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int o = offsets_[k];
    for (int r = 0; r < blocks_[k]; ++r) {
      for (int c = 0; c < blocks_[k]; ++c) {
        units_.emplace_back(o + r, o + c);
      }
    }
  }
}

MatrixAlgebra MatrixAlgebra::full(int dim) {
  return MatrixAlgebra(std::vector<int>{dim});
}

double MatrixAlgebra::pattern_defect(const ComplexMatrix& m) const {
  double worst = 0.0;
  int block = 0;
  for (int i = 0; i < ambient_; ++i) {
    while (i >= offsets_[block] + blocks_[block]) ++block;
    const int lo = offsets_[block];
    const int hi = lo + blocks_[block];
    for (int j = 0; j < ambient_; ++j) {
      if (j >= lo && j < hi) continue;
      worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

ComplexMatrix MatrixAlgebra::masked(const ComplexMatrix& m) const {
  ComplexMatrix out = ComplexMatrix::Zero(ambient_, ambient_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int o = offsets_[k];
    const int b = blocks_[k];
    out.block(o, o, b, b) = m.block(o, o, b, b);
  }
  return out;
}

AlgebraElement::AlgebraElement(MatrixAlgebra algebra, ComplexMatrix matrix,
                               double pattern_tol)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != algebra_.ambient_dim() ||
      matrix_.cols() != algebra_.ambient_dim()) {
    throw PatternViolation("AlgebraElement: matrix shape does not match the "
                           "algebra's ambient dimension");
  }
  if (!all_finite(matrix_)) {
    throw NumericalFailure("AlgebraElement: non-finite entries");
  }
  const double defect = algebra_.pattern_defect(matrix_);
  if (defect > pattern_tol) {
    throw PatternViolation("AlgebraElement: off-pattern mass " +
                           std::to_string(defect) + " exceeds tolerance");
  }
  matrix_ = algebra_.masked(matrix_);
}

AlgebraElement element_unchecked(MatrixAlgebra algebra, ComplexMatrix matrix) {
  return AlgebraElement(AlgebraElement::Unchecked{}, std::move(algebra),
                        std::move(matrix));
}

AlgebraElement AlgebraElement::zero(const MatrixAlgebra& algebra) {
  return element_unchecked(
      algebra, ComplexMatrix::Zero(algebra.ambient_dim(), algebra.ambient_dim()));
}

AlgebraElement AlgebraElement::identity(const MatrixAlgebra& algebra) {
  return element_unchecked(algebra, ComplexMatrix::Identity(
                                        algebra.ambient_dim(),
                                        algebra.ambient_dim()));
}

AlgebraElement AlgebraElement::unit(const MatrixAlgebra& algebra, int row,
                                    int col) {
  ComplexMatrix m =
      ComplexMatrix::Zero(algebra.ambient_dim(), algebra.ambient_dim());
  m(row, col) = Complex(1.0, 0.0);
  if (algebra.pattern_defect(m) > 0.0) {
    throw PatternViolation("AlgebraElement::unit: (" + std::to_string(row) +
                           "," + std::to_string(col) +
                           ") is outside the block pattern");
  }
  return element_unchecked(algebra, std::move(m));
}

AlgebraElement AlgebraElement::adjoint() const {
  return element_unchecked(algebra_, matrix_.adjoint());
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b,
                          const char* where) {
  if (a.algebra() != b.algebra()) {
    throw DomainMismatch(std::string(where) +
                         ": operands live in different algebras");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_algebra(*this, other, "AlgebraElement::operator+=");
  matrix_ += other.matrix_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_algebra(*this, other, "AlgebraElement::operator-=");
  matrix_ -= other.matrix_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scalar) {
  matrix_ *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b, "AlgebraElement::operator*");
  // Off-pattern entries are exact zeros, so the product stays in pattern
  // exactly.
  return element_unchecked(a.algebra(), a.matrix() * b.matrix());
}

double operator_norm(const AlgebraElement& a) {
  return operator_norm(a.matrix());
}

ComplexMatrix SpectralDecomposition::reconstruct(int dim) const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const SpectralTerm& t : terms) {
    sum += t.eigenvalue * t.projection.matrix();
  }
  return sum;
}

AlgebraElement RiemannSum::value(const MatrixAlgebra& algebra) const {
  return element_unchecked(algebra, terms.reconstruct(algebra.ambient_dim()));
}

std::pair<AlgebraElement, AlgebraElement> cartesian_parts(
    const AlgebraElement& a) {
  const ComplexMatrix& m = a.matrix();
  const ComplexMatrix re = 0.5 * (m + m.adjoint());
  const ComplexMatrix im = Complex(0.0, 0.5) * (m.adjoint() - m);
  return {element_unchecked(a.algebra(), re),
          element_unchecked(a.algebra(), im)};
}

namespace {

struct BlockEigPair {
  int offset = 0;
  int size = 0;
  RealVector values;
  ComplexMatrix vectors;
};

// Per-block Hermitian eigensystems. Decomposing per block (rather than on the
// ambient matrix) keeps every eigenvector supported in a single block, so all
// derived projections lie in the pattern exactly.
std::vector<BlockEigPair> block_eigensystems(const AlgebraElement& a,
                                             const Tolerance& tol) {
  const ComplexMatrix& m = a.matrix();
  const double defect = hermitian_defect(m);
  if (defect > tol.threshold(frobenius_norm(m))) {
    throw NotHermitian("block_eigensystems: symmetry defect " +
                       std::to_string(defect) + " exceeds tolerance");
  }
  std::vector<BlockEigPair> out;
  const MatrixAlgebra& alg = a.algebra();
  for (int k = 0; k < alg.block_count(); ++k) {
    const int o = alg.block_offset(k);
    const int b = alg.blocks()[k];
    const ComplexMatrix blk = m.block(o, o, b, b);
    const ComplexMatrix sym = 0.5 * (blk + blk.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("block_eigensystems: solver did not converge");
    }
    out.push_back(BlockEigPair{o, b, solver.eigenvalues(),
                               solver.eigenvectors()});
  }
  return out;
}

ComplexMatrix embedded_outer(const BlockEigPair& blk, int col, int dim) {
  ComplexVector v = ComplexVector::Zero(dim);
  v.segment(blk.offset, blk.size) = blk.vectors.col(col);
  return v * v.adjoint();
}

}  // namespace

std::pair<AlgebraElement, AlgebraElement> jordan_parts(const AlgebraElement& a,
                                                       const Tolerance& tol) {
  const int dim = a.dim();
  const auto blocks = block_eigensystems(a, tol);
  ComplexMatrix plus = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix minus = ComplexMatrix::Zero(dim, dim);
  for (const BlockEigPair& blk : blocks) {
    for (int c = 0; c < blk.size; ++c) {
      double lambda = blk.values[c];
      if (std::abs(lambda) <= tol.absolute) continue;  // clamp to zero
      if (lambda > 0.0) {
        plus += lambda * embedded_outer(blk, c, dim);
      } else {
        minus += (-lambda) * embedded_outer(blk, c, dim);
      }
    }
  }
  return {element_unchecked(a.algebra(), std::move(plus)),
          element_unchecked(a.algebra(), std::move(minus))};
}

SpectralDecomposition spectral_decomposition(const AlgebraElement& a,
                                             const Tolerance& tol) {
  const int dim = a.dim();
  const auto blocks = block_eigensystems(a, tol);

  struct Entry {
    double lambda;
    int block;
    int col;
  };
  std::vector<Entry> entries;
  double spectral_radius = 0.0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int c = 0; c < blocks[k].size; ++c) {
      entries.push_back(Entry{blocks[k].values[c], static_cast<int>(k), c});
      spectral_radius = std::max(spectral_radius, std::abs(blocks[k].values[c]));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.lambda < y.lambda; });

  // Near-degenerate eigenvalues merge into one eigenprojection; without this
  // the mutual-orthogonality invariant fails on near-degenerate spectra.
  const double cluster_tol = 1e-8 * std::max(1.0, spectral_radius);

  SpectralDecomposition result;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i + 1;
    while (j < entries.size() &&
           entries[j].lambda - entries[j - 1].lambda <= cluster_tol) {
      ++j;
    }
    ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
    double lambda_sum = 0.0;
    for (std::size_t t = i; t < j; ++t) {
      proj += embedded_outer(blocks[entries[t].block], entries[t].col, dim);
      lambda_sum += entries[t].lambda;
    }
    double rep = lambda_sum / static_cast<double>(j - i);
    if (std::abs(rep) <= tol.absolute) rep = 0.0;
    result.terms.push_back(
        SpectralTerm{rep, element_unchecked(a.algebra(), std::move(proj))});
    i = j;
  }
  return result;
}

RiemannSum riemann_sum(const AlgebraElement& a, int level,
                       const Tolerance& tol) {
  if (level < 1) {
    throw std::invalid_argument("riemann_sum: level must be >= 1");
  }
  const SpectralDecomposition sd = spectral_decomposition(a, tol);

  const double lo = sd.terms.front().eigenvalue;  // terms ascend
  bool psd = true;
  for (const SpectralTerm& t : sd.terms) {
    if (t.eigenvalue < -tol.absolute) psd = false;
  }

  // Bins [lo + k/l, lo + (k+1)/l) anchored at the bottom of the spectrum:
  // halving the width refines the partition. The tag of each occupied bin is
  // the smallest eigenvalue it contains, so the sum is exact once the bins
  // separate the spectrum; empty bins carry no spectral mass and are skipped.
  const double width = 1.0 / static_cast<double>(level);
  RiemannSum out;
  out.level = level;
  out.error_bound = width;

  std::int64_t current_bin = -1;
  for (const SpectralTerm& t : sd.terms) {  // terms are ascending in lambda
    const std::int64_t bin =
        static_cast<std::int64_t>(std::floor((t.eigenvalue - lo) / width));
    if (bin == current_bin && !out.terms.terms.empty()) {
      out.terms.terms.back().projection += t.projection;
    } else {
      double tag = t.eigenvalue;
      if (psd && tag < 0.0) tag = 0.0;  // zeta >= 0 on the positive cone
      out.terms.terms.push_back(SpectralTerm{tag, t.projection});
      current_bin = bin;
    }
  }
  return out;
}

namespace {

template <typename PerBlock>
AlgebraElement assemble_blocks(const MatrixAlgebra& algebra, PerBlock&& fill) {
  ComplexMatrix m =
      ComplexMatrix::Zero(algebra.ambient_dim(), algebra.ambient_dim());
  for (int k = 0; k < algebra.block_count(); ++k) {
    const int o = algebra.block_offset(k);
    const int b = algebra.blocks()[k];
    m.block(o, o, b, b) = fill(b);
  }
  return element_unchecked(algebra, std::move(m));
}

}  // namespace

AlgebraElement sample_positive(const MatrixAlgebra& algebra, Rng& rng) {
  AlgebraElement e = assemble_blocks(algebra, [&](int b) -> ComplexMatrix {
    const ComplexMatrix g = random_gaussian_matrix(rng, b, b);
    return g.adjoint() * g;
  });
  const double norm = operator_norm(e);
  if (norm > 0.0) e *= Complex(1.0 / norm, 0.0);
  return e;
}

AlgebraElement sample_positive(const MatrixAlgebra& algebra,
                               std::uint64_t seed) {
  Rng rng(seed);
  return sample_positive(algebra, rng);
}

AlgebraElement sample_projection(const MatrixAlgebra& algebra, Rng& rng) {
  return assemble_blocks(algebra, [&](int b) -> ComplexMatrix {
    const ComplexMatrix u = random_unitary(rng, b);
    ComplexMatrix d = ComplexMatrix::Zero(b, b);
    for (int i = 0; i < b; ++i) {
      d(i, i) = rng.coin() ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    return u * d * u.adjoint();
  });
}

AlgebraElement sample_projection(const MatrixAlgebra& algebra,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return sample_projection(algebra, rng);
}

AlgebraElement sample_hermitian(const MatrixAlgebra& algebra, Rng& rng) {
  return assemble_blocks(algebra, [&](int b) -> ComplexMatrix {
    const ComplexMatrix g = random_gaussian_matrix(rng, b, b);
    return 0.5 * (g + g.adjoint());
  });
}

AlgebraElement sample_hermitian(const MatrixAlgebra& algebra,
                                std::uint64_t seed) {
  Rng rng(seed);
  return sample_hermitian(algebra, rng);
}

AlgebraElement sample_element(const MatrixAlgebra& algebra, Rng& rng) {
  return assemble_blocks(algebra, [&](int b) -> ComplexMatrix {
    return random_gaussian_matrix(rng, b, b);
  });
}

AlgebraElement sample_unitary_element(const MatrixAlgebra& algebra, Rng& rng) {
  return assemble_blocks(algebra, [&](int b) -> ComplexMatrix {
    return random_unitary(rng, b);
  });
}

std::pair<AlgebraElement, AlgebraElement> sample_commuting_projections(
    const MatrixAlgebra& algebra, Rng& rng) {
  ComplexMatrix p = ComplexMatrix::Zero(algebra.ambient_dim(),
                                        algebra.ambient_dim());
  ComplexMatrix q = p;
  for (int k = 0; k < algebra.block_count(); ++k) {
    const int o = algebra.block_offset(k);
    const int b = algebra.blocks()[k];
    const ComplexMatrix u = random_unitary(rng, b);
    ComplexMatrix d1 = ComplexMatrix::Zero(b, b);
    ComplexMatrix d2 = ComplexMatrix::Zero(b, b);
    for (int i = 0; i < b; ++i) {
      if (rng.coin()) d1(i, i) = 1.0;
      if (rng.coin()) d2(i, i) = 1.0;
    }
    p.block(o, o, b, b) = u * d1 * u.adjoint();
    q.block(o, o, b, b) = u * d2 * u.adjoint();
  }
  return {element_unchecked(algebra, std::move(p)),
          element_unchecked(algebra, std::move(q))};
}

}  // namespace ovm
