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

#include <optional>
#include <vector>

#include "ovm/measures.hpp"

namespace ovm {

/// Complex-valued function on the atoms of a finite space.
class ScalarFunction {
 public:
  ScalarFunction(FiniteMeasurableSpace space, std::vector<Complex> values);

  static ScalarFunction constant(const FiniteMeasurableSpace& space, Complex c);
  static ScalarFunction indicator(const MeasurableSet& set);

  const FiniteMeasurableSpace& space() const { return space_; }
  Complex operator()(int atom) const { return values_[atom]; }
  const std::vector<Complex>& values() const { return values_; }

  ScalarFunction pointwise_product(const ScalarFunction& other) const;
  friend ScalarFunction operator*(Complex c, ScalarFunction f);
  friend ScalarFunction operator+(const ScalarFunction& f,
                                  const ScalarFunction& g);

 private:
  FiniteMeasurableSpace space_;
  std::vector<Complex> values_;
};

/// Operator-valued function on the atoms; on a finite space this realizes
/// both the tensor product of scalar functions with W1 and its sup-norm
/// completion, which coincide here.
class OperatorFunction {
 public:
  OperatorFunction(FiniteMeasurableSpace space, MatrixAlgebra algebra,
                   std::vector<AlgebraElement> values);

  static OperatorFunction constant(const FiniteMeasurableSpace& space,
                                   const AlgebraElement& value);
  /// f (x) A, the decomposable tensor.
  static OperatorFunction tensor(const ScalarFunction& f,
                                 const AlgebraElement& a);
  /// chi_set (x) A.
  static OperatorFunction indicator_tensor(const MeasurableSet& set,
                                           const AlgebraElement& a);

  const FiniteMeasurableSpace& space() const { return space_; }
  const MatrixAlgebra& algebra() const { return algebra_; }
  const AlgebraElement& at(int atom) const { return values_[atom]; }

  OperatorFunction pointwise_product(const OperatorFunction& other) const;
  OperatorFunction adjoint() const;
  double sup_norm() const;

  friend OperatorFunction operator+(OperatorFunction f,
                                    const OperatorFunction& g);
  friend OperatorFunction operator-(OperatorFunction f,
                                    const OperatorFunction& g);
  friend OperatorFunction operator*(Complex c, OperatorFunction f);

 private:
  FiniteMeasurableSpace space_;
  MatrixAlgebra algebra_;
  std::vector<AlgebraElement> values_;
};

/// int f dE for a POV measure: sum_x f(x) E({x}).
AlgebraElement integrate_scalar_pov(const ScalarFunction& f,
                                    const PovMeasure& measure);

/// int f dm_A computed literally through the four-part decomposition
/// re(A)_+ - re(A)_- + i im(A)_+ - i im(A)_-, then cross-checked against the
/// direct linear extension sum_x f(x) m^x(A); disagreement beyond 1e-10
/// raises NumericalFailure.
AlgebraElement integrate_scalar(const ScalarFunction& f,
                                const AlgebraElement& a,
                                const NonNegativeMeasure& measure,
                                const Tolerance& tol = {});

/// int F dm = sum_x m^x(F(x)).
AlgebraElement integrate(const OperatorFunction& f,
                         const NonNegativeMeasure& measure);

struct CauchyOptions {
  int window = 5;      // tail length inspected
  double gap = 1e-7;   // largest allowed sup-norm gap inside the tail
};

/// Limit of int F_i dm along a sup-norm Cauchy sequence; throws NotCauchy
/// when the tail window has gaps above the threshold.
AlgebraElement integrate_limit(const std::vector<OperatorFunction>& sequence,
                               const NonNegativeMeasure& measure,
                               const CauchyOptions& options = {});

/// || int FG dM - (int F dM)(int G dM) ||.
double multiplicativity_defect(const OperatorFunction& f,
                               const OperatorFunction& g,
                               const NonNegativeSpectralMeasure& measure);

struct MonotoneReport {
  std::vector<double> deviations;  // || int f_n dE - int f dE || per step
  double final_deviation = 0.0;
  double worst_bound_margin = 0.0;  // min PSD margin of bound - int f_n dE
};

/// Monotone-convergence harness: checks the sequence is pointwise
/// nondecreasing and nonnegative (NotMonotone), dominated by the bound
/// (BoundViolated), and reports the deviation of each partial integral from
/// the integral of the limit function (the final element when no explicit
/// limit is given).
MonotoneReport monotone_convergence_check(
    const std::vector<ScalarFunction>& sequence, const PovMeasure& measure,
    const AlgebraElement& bound,
    const std::optional<ScalarFunction>& limit = std::nullopt,
    const Tolerance& tol = {});

}  // namespace ovm
