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

#include <functional>
#include <string>
#include <vector>

#include "ovm/integration.hpp"
#include "ovm/measures.hpp"

namespace ovm {

/// Family {E_A} indexed by the positive cone of the domain algebra. The index
/// set is infinite, so the family is an evaluator that gets queried at chosen
/// operators rather than enumerated; compatibility is certified on a finite
/// probe set and reports are tolerance-qualified accordingly.
struct PositiveFamily {
  FiniteMeasurableSpace space;
  MatrixAlgebra domain;
  MatrixAlgebra codomain;
  std::function<PovMeasure(const AlgebraElement&)> evaluate;
};

/// Family {F_P} indexed by the Hermitian projections of the domain algebra.
struct ProjectionFamily {
  FiniteMeasurableSpace space;
  MatrixAlgebra domain;
  MatrixAlgebra codomain;
  std::function<SpectralMeasure(const AlgebraElement&)> evaluate;
};

PositiveFamily family_from_measure(const NonNegativeMeasure& measure);
ProjectionFamily projection_family_from_measure(
    const NonNegativeMeasure& measure);

struct FamilyCheckOptions {
  int samples = 12;
  std::uint64_t seed = 7;
};

struct FamilyWitness {
  std::string check;
  std::uint64_t sample_seed = 0;
  int atom = -1;
  double defect = 0.0;
};

struct CompatibilityReport {
  double additivity_defect = 0.0;
  double homogeneity_defect = 0.0;
  double linear_relation_defect = 0.0;
  double product_law_defect = 0.0;
  double bound_constant = 0.0;  // k_Delta estimate over the probe set
  double measure_defect = 0.0;  // worst validation defect of returned measures
  bool pass = false;
  std::vector<FamilyWitness> witnesses;
};

/// Probes additivity E_{A+B} = E_A + E_B, homogeneity E_{cA} = c E_A and the
/// uniform bound ||E_A(D)|| <= k_D ||A|| on seeded PSD samples.
CompatibilityReport check_positive_family(const PositiveFamily& family,
                                          const FamilyCheckOptions& options = {},
                                          const Tolerance& tol = {});

/// Builds the unique non-negative measure with m_A = E_A by applying the
/// four-part decomposition to every matrix unit of the domain pattern.
/// Throws IncompatibleFamily when the probe check fails.
NonNegativeMeasure build_from_positive_family(
    const PositiveFamily& family, const FamilyCheckOptions& options = {},
    const Tolerance& tol = {});

/// Probes linear relations sum_i c_i F_{P_i}(D) = 0 for matching projection
/// relations (generated from common eigenbases, plus P + (I-P) = I), the
/// projection bound ||F_P(D)|| <= k_D, and the product law on commuting pairs.
CompatibilityReport check_projection_family(
    const ProjectionFamily& family, const FamilyCheckOptions& options = {},
    const Tolerance& tol = {});

/// Builds the unique non-negative spectral measure with M_P = F_P: Hermitian
/// recombinations of the matrix units are decomposed spectrally and the
/// family is evaluated on the resulting eigenprojections.
NonNegativeSpectralMeasure build_from_projection_family(
    const ProjectionFamily& family, const FamilyCheckOptions& options = {},
    const Tolerance& tol = {});

struct RiemannPathPoint {
  int level = 0;
  double defect = 0.0;
  double bound = 0.0;  // 2 k_Delta / level
};

struct RiemannPathReport {
  std::vector<RiemannPathPoint> points;
  double k_delta = 0.0;
  bool pass = false;
};

/// Verifies that evaluating the family on Riemann binnings S_l(A) converges
/// to the directly built M_A at the Cauchy rate 2 k_Delta / l.
RiemannPathReport riemann_path_check(const ProjectionFamily& family,
                                     const AlgebraElement& a,
                                     const std::vector<int>& levels,
                                     const FamilyCheckOptions& options = {},
                                     const Tolerance& tol = {});

}  // namespace ovm
