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

#include "ovm/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace ovm {

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double hermitian_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm();
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex& z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

EigenSystem hermitian_eig(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) {
    throw NotSquare("hermitian_eig: matrix is " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()));
  }
  if (!all_finite(a)) {
    throw NumericalFailure("hermitian_eig: non-finite entries");
  }
  const double defect = hermitian_defect(a);
  if (defect > tol.threshold(frobenius_norm(a))) {
    throw NotHermitian("hermitian_eig: symmetry defect " +
                       std::to_string(defect) + " exceeds tolerance");
  }
  // Symmetrize the residual defect away; downstream Jordan splits are much
  // more stable on an exactly Hermitian input.
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian_eig: iteration did not converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (!all_finite(a)) {
    throw NumericalFailure("operator_norm: non-finite entries");
  }
  const ComplexMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("operator_norm: iteration did not converge");
  }
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

PsdResult is_psd(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) {
    throw NotSquare("is_psd: matrix is not square");
  }
  const EigenSystem es = hermitian_eig(a, tol);
  const double margin =
      es.eigenvalues.size() > 0 ? es.eigenvalues.minCoeff() : 0.0;
  return PsdResult{margin, margin >= -tol.absolute};
}

}  // namespace ovm
