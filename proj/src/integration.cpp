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

#include "ovm/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ovm {

ScalarFunction::ScalarFunction(FiniteMeasurableSpace space,
                               std::vector<Complex> values)
    : space_(space), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_.atom_count()) {
    throw DomainMismatch("ScalarFunction: one value per atom required");
  }
  for (const Complex& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalFailure("ScalarFunction: non-finite value");
    }
  }
}

ScalarFunction ScalarFunction::constant(const FiniteMeasurableSpace& space,
                                        Complex c) {
  return ScalarFunction(space,
                        std::vector<Complex>(space.atom_count(), c));
}

ScalarFunction ScalarFunction::indicator(const MeasurableSet& set) {
  const FiniteMeasurableSpace space(set.atom_count());
  std::vector<Complex> values(space.atom_count(), Complex(0.0, 0.0));
  for (int x = 0; x < space.atom_count(); ++x) {
    if (set.contains(x)) values[x] = Complex(1.0, 0.0);
  }
  return ScalarFunction(space, std::move(values));
}

ScalarFunction ScalarFunction::pointwise_product(
    const ScalarFunction& other) const {
  if (space_ != other.space_) {
    throw DomainMismatch("ScalarFunction: different spaces");
  }
  std::vector<Complex> values(values_);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= other.values_[i];
  return ScalarFunction(space_, std::move(values));
}

ScalarFunction operator*(Complex c, ScalarFunction f) {
  for (Complex& z : f.values_) z *= c;
  return f;
}

ScalarFunction operator+(const ScalarFunction& f, const ScalarFunction& g) {
  if (f.space_ != g.space_) {
    throw DomainMismatch("ScalarFunction: different spaces");
  }
  std::vector<Complex> values(f.values_);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += g.values_[i];
  return ScalarFunction(f.space_, std::move(values));
}

OperatorFunction::OperatorFunction(FiniteMeasurableSpace space,
                                   MatrixAlgebra algebra,
                                   std::vector<AlgebraElement> values)
    : space_(space), algebra_(std::move(algebra)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_.atom_count()) {
    throw DomainMismatch("OperatorFunction: one value per atom required");
  }
  for (const AlgebraElement& v : values_) {
    if (v.algebra() != algebra_) {
      throw DomainMismatch("OperatorFunction: value outside the algebra");
    }
  }
}

OperatorFunction OperatorFunction::constant(const FiniteMeasurableSpace& space,
                                            const AlgebraElement& value) {
  return OperatorFunction(
      space, value.algebra(),
      std::vector<AlgebraElement>(space.atom_count(), value));
}

OperatorFunction OperatorFunction::tensor(const ScalarFunction& f,
                                          const AlgebraElement& a) {
  std::vector<AlgebraElement> values;
  values.reserve(f.space().atom_count());
  for (int x = 0; x < f.space().atom_count(); ++x) {
    values.push_back(f(x) * a);
  }
  return OperatorFunction(f.space(), a.algebra(), std::move(values));
}

OperatorFunction OperatorFunction::indicator_tensor(const MeasurableSet& set,
                                                    const AlgebraElement& a) {
  return tensor(ScalarFunction::indicator(set), a);
}

OperatorFunction OperatorFunction::pointwise_product(
    const OperatorFunction& other) const {
  if (space_ != other.space_ || algebra_ != other.algebra_) {
    throw DomainMismatch("OperatorFunction: mismatched product operands");
  }
  std::vector<AlgebraElement> values;
  values.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values.push_back(values_[i] * other.values_[i]);
  }
  return OperatorFunction(space_, algebra_, std::move(values));
}

OperatorFunction OperatorFunction::adjoint() const {
  std::vector<AlgebraElement> values;
  values.reserve(values_.size());
  for (const AlgebraElement& v : values_) values.push_back(v.adjoint());
  return OperatorFunction(space_, algebra_, std::move(values));
}

double OperatorFunction::sup_norm() const {
  double sup = 0.0;
  for (const AlgebraElement& v : values_) {
    sup = std::max(sup, operator_norm(v));
  }
  return sup;
}

OperatorFunction operator+(OperatorFunction f, const OperatorFunction& g) {
  if (f.space_ != g.space_ || f.algebra_ != g.algebra_) {
    throw DomainMismatch("OperatorFunction: mismatched sum operands");
  }
  for (std::size_t i = 0; i < f.values_.size(); ++i) f.values_[i] += g.values_[i];
  return f;
}

OperatorFunction operator-(OperatorFunction f, const OperatorFunction& g) {
  if (f.space_ != g.space_ || f.algebra_ != g.algebra_) {
    throw DomainMismatch("OperatorFunction: mismatched difference operands");
  }
  for (std::size_t i = 0; i < f.values_.size(); ++i) f.values_[i] -= g.values_[i];
  return f;
}

OperatorFunction operator*(Complex c, OperatorFunction f) {
  for (AlgebraElement& v : f.values_) v *= c;
  return f;
}

AlgebraElement integrate_scalar_pov(const ScalarFunction& f,
                                    const PovMeasure& measure) {
  if (f.space() != measure.space()) {
    throw DomainMismatch("integrate_scalar_pov: different spaces");
  }
  AlgebraElement acc = AlgebraElement::zero(measure.codomain());
  for (int x = 0; x < f.space().atom_count(); ++x) {
    acc += f(x) * measure.atom_value(x);
  }
  return acc;
}

AlgebraElement integrate_scalar(const ScalarFunction& f,
                                const AlgebraElement& a,
                                const NonNegativeMeasure& measure,
                                const Tolerance& tol) {
  if (a.algebra() != measure.domain()) {
    throw DomainMismatch("integrate_scalar: operand outside the domain");
  }
  if (f.space() != measure.space()) {
    throw DomainMismatch("integrate_scalar: different spaces");
  }

  const auto [re, im] = cartesian_parts(a);
  const auto [re_plus, re_minus] = jordan_parts(re, tol);
  const auto [im_plus, im_minus] = jordan_parts(im, tol);

  const auto part_integral = [&](const AlgebraElement& part) {
    AlgebraElement acc = AlgebraElement::zero(measure.codomain());
    for (int x = 0; x < f.space().atom_count(); ++x) {
      acc += f(x) * measure.apply_atom(x, part);
    }
    return acc;
  };

  const Complex i_unit(0.0, 1.0);
  AlgebraElement four_part = part_integral(re_plus) -
                             part_integral(re_minus) +
                             i_unit * part_integral(im_plus) -
                             i_unit * part_integral(im_minus);

  // The direct linear extension is the shortcut the decomposition must agree
  // with; the agreement is the well-definedness check.
  AlgebraElement direct = AlgebraElement::zero(measure.codomain());
  for (int x = 0; x < f.space().atom_count(); ++x) {
    direct += f(x) * measure.apply_atom(x, a);
  }
  const double defect = operator_norm(four_part - direct);
  if (defect > 1e-10 * std::max(1.0, operator_norm(direct))) {
    throw NumericalFailure(
        "integrate_scalar: four-part decomposition and linear extension "
        "disagree by " + std::to_string(defect));
  }
  return four_part;
}

AlgebraElement integrate(const OperatorFunction& f,
                         const NonNegativeMeasure& measure) {
  if (f.space() != measure.space()) {
    throw DomainMismatch("integrate: different spaces");
  }
  if (f.algebra() != measure.domain()) {
    throw DomainMismatch("integrate: function outside the domain algebra");
  }
  AlgebraElement acc = AlgebraElement::zero(measure.codomain());
  for (int x = 0; x < f.space().atom_count(); ++x) {
    acc += measure.apply_atom(x, f.at(x));
  }
  return acc;
}

AlgebraElement integrate_limit(const std::vector<OperatorFunction>& sequence,
                               const NonNegativeMeasure& measure,
                               const CauchyOptions& options) {
  if (sequence.empty()) {
    throw NotCauchy("integrate_limit: empty sequence");
  }
  const int n = static_cast<int>(sequence.size());
  const int window = std::min(options.window, n);
  for (int i = n - window; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = (sequence[i] - sequence[j]).sup_norm();
      if (gap > options.gap) {
        throw NotCauchy("integrate_limit: tail gap " + std::to_string(gap) +
                        " between elements " + std::to_string(i) + " and " +
                        std::to_string(j));
      }
    }
  }
  return integrate(sequence.back(), measure);
}

double multiplicativity_defect(const OperatorFunction& f,
                               const OperatorFunction& g,
                               const NonNegativeSpectralMeasure& measure) {
  const AlgebraElement lhs = integrate(f.pointwise_product(g), measure);
  const AlgebraElement rhs = integrate(f, measure) * integrate(g, measure);
  return operator_norm(lhs - rhs);
}

MonotoneReport monotone_convergence_check(
    const std::vector<ScalarFunction>& sequence, const PovMeasure& measure,
    const AlgebraElement& bound, const std::optional<ScalarFunction>& limit,
    const Tolerance& tol) {
  if (sequence.empty()) {
    throw NotMonotone("monotone_convergence_check: empty sequence");
  }
  const int atoms = measure.space().atom_count();
  for (const ScalarFunction& f : sequence) {
    if (f.space() != measure.space()) {
      throw DomainMismatch("monotone_convergence_check: different spaces");
    }
    for (int x = 0; x < atoms; ++x) {
      if (std::abs(f(x).imag()) > tol.absolute) {
        throw NotMonotone("monotone_convergence_check: non-real value at atom " +
                          std::to_string(x));
      }
      if (f(x).real() < -tol.absolute) {
        throw NotMonotone("monotone_convergence_check: negative value at atom " +
                          std::to_string(x));
      }
    }
  }
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    for (int x = 0; x < atoms; ++x) {
      if (sequence[i](x).real() < sequence[i - 1](x).real() - tol.absolute) {
        throw NotMonotone("monotone_convergence_check: sequence decreases at "
                          "step " + std::to_string(i) + ", atom " +
                          std::to_string(x));
      }
    }
  }

  const ScalarFunction& limit_fn = limit.has_value() ? *limit : sequence.back();
  const AlgebraElement limit_integral = integrate_scalar_pov(limit_fn, measure);
  const double bound_scale = std::max(1.0, operator_norm(bound));

  MonotoneReport report;
  report.worst_bound_margin = std::numeric_limits<double>::infinity();
  for (const ScalarFunction& f : sequence) {
    const AlgebraElement partial = integrate_scalar_pov(f, measure);
    const double margin = is_psd((bound - partial).matrix(), tol).margin;
    report.worst_bound_margin = std::min(report.worst_bound_margin, margin);
    if (margin < -tol.threshold(bound_scale)) {
      throw BoundViolated("monotone_convergence_check: partial integral "
                          "exceeds the bound, margin " +
                          std::to_string(margin));
    }
    report.deviations.push_back(operator_norm(partial - limit_integral));
  }
  report.final_deviation = report.deviations.back();
  return report;
}

}  // namespace ovm
