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

#include <Eigen/Dense>
#include <complex>

#include "ovm/errors.hpp"

namespace ovm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute/relative tolerance pair shared by every predicate in the library.
/// Equality of operators always means "within Tolerance" somewhere downstream,
/// so the same two knobs travel through the whole stack.
struct Tolerance {
  double absolute = 1e-9;
  double relative = 1e-9;

  /// Acceptance threshold for a quantity living at the given scale.
  double threshold(double scale) const { return absolute + relative * scale; }
};

/// Result of a Hermitian eigendecomposition: eigenvalues ascending,
/// eigenvectors as orthonormal columns.
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Smallest eigenvalue together with the thresholded verdict, so callers can
/// assert quantitatively instead of on a bare bool.
struct PsdResult {
  double margin = 0.0;
  bool psd = false;
};

double frobenius_norm(const ComplexMatrix& a);

/// ||A - A*||_F, the deviation from self-adjointness.
double hermitian_defect(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

/// Eigendecomposition of a Hermitian matrix. The input may be Hermitian only
/// up to tolerance; the defect is symmetrized away before decomposing.
/// Throws NotSquare, NotHermitian or NumericalFailure.
EigenSystem hermitian_eig(const ComplexMatrix& a, const Tolerance& tol = {});

/// Largest singular value, computed as sqrt of the top eigenvalue of A*A.
double operator_norm(const ComplexMatrix& a);

/// Positive-semidefiniteness check with the smallest eigenvalue as margin.
/// Throws NotHermitian when the symmetry defect exceeds tolerance.
PsdResult is_psd(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace ovm
