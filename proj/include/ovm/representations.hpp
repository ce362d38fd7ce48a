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

#include <vector>

#include "ovm/integration.hpp"
#include "ovm/measures.hpp"

namespace ovm {

struct CertificationReport {
  double unitality_defect = 0.0;
  double multiplicativity_defect = 0.0;
  double star_defect = 0.0;
  double norm_estimate = 0.0;  // sampled lower bound of ||rho||
  bool pass = false;
};

/// Linear map rho: C(X, W1) -> W2 stored by its action on the canonical basis
/// chi_x (x) E_rc. The unital/multiplicative/star flags are only set by
/// certify_representation (or by the generator, whose construction guarantees
/// them).
class Representation {
 public:
  Representation(FiniteMeasurableSpace space, MatrixAlgebra domain,
                 MatrixAlgebra codomain,
                 std::vector<std::vector<AlgebraElement>> basis_action);

  const FiniteMeasurableSpace& space() const { return space_; }
  const MatrixAlgebra& domain() const { return domain_; }
  const MatrixAlgebra& codomain() const { return codomain_; }

  const AlgebraElement& basis_action(int atom, int unit) const {
    return basis_action_[atom][unit];
  }

  /// rho(F) by linear extension over the stored basis action.
  AlgebraElement apply(const OperatorFunction& f) const;

  /// rho(chi_x (x) a) for a single atom.
  AlgebraElement apply_atom(int atom, const AlgebraElement& a) const;

  bool certified() const {
    return certified_unital_ && certified_multiplicative_ &&
           certified_star_preserving_;
  }
  bool certified_unital() const { return certified_unital_; }
  bool certified_multiplicative() const { return certified_multiplicative_; }
  bool certified_star_preserving() const {
    return certified_star_preserving_;
  }

 private:
  FiniteMeasurableSpace space_;
  MatrixAlgebra domain_;
  MatrixAlgebra codomain_;
  std::vector<std::vector<AlgebraElement>> basis_action_;
  bool certified_unital_ = false;
  bool certified_multiplicative_ = false;
  bool certified_star_preserving_ = false;

  friend CertificationReport certify_representation(Representation& rep,
                                                    int samples,
                                                    std::uint64_t seed,
                                                    const Tolerance& tol);
  friend Representation generate_representation(
      const struct RepresentationBlueprint& blueprint);
};

/// Canonical-form data for generating ground-truth representations:
/// rho(F) = U (sum_x F(x) (x) I_{k_x}) U*.
struct RepresentationBlueprint {
  FiniteMeasurableSpace space;
  MatrixAlgebra domain;
  std::vector<int> multiplicities;  // one k_x >= 0 per atom
  ComplexMatrix intertwiner;        // unitary on the total space

  int total_dim() const;
};

struct BlueprintLimits {
  int max_atoms = 4;
  int max_domain_ambient = 3;
  int max_total_dim = 12;
};

RepresentationBlueprint random_blueprint(std::uint64_t seed,
                                         const BlueprintLimits& limits = {});

/// Identity intertwiner, unit multiplicities.
RepresentationBlueprint identity_blueprint(const FiniteMeasurableSpace& space,
                                           const MatrixAlgebra& domain);

Representation generate_representation(const RepresentationBlueprint& blueprint);

/// Samples unitality, multiplicativity and *-preservation defects, estimates
/// the operator norm over unit-sup-norm inputs, and sets the certification
/// flags accordingly.
CertificationReport certify_representation(Representation& rep,
                                           int samples = 8,
                                           std::uint64_t seed = 0xCEED,
                                           const Tolerance& tol = {});

/// Direction rho -> M: reads the measure off the basis action, then
/// validates it as a normalized non-negative spectral measure. Throws
/// NotARepresentation when certification or validation fails.
NonNegativeSpectralMeasure rep_to_measure(const Representation& rep,
                                          const Tolerance& tol = {});

/// Direction M -> rho: validates the measure (normalized, spectral,
/// non-negative), then builds the representation rho(F) = int F dM. Throws
/// InvalidMeasure.
Representation measure_to_rep(const NonNegativeSpectralMeasure& measure,
                              const Tolerance& tol = {});

struct RoundTripDefects {
  double rep_side = 0.0;
  double measure_side = 0.0;
};

/// Generates a seeded representation, runs both conversion directions and
/// reports the basis-level defects of the two round trips.
RoundTripDefects roundtrip_defect(std::uint64_t seed,
                                  const BlueprintLimits& limits = {},
                                  const Tolerance& tol = {});

}  // namespace ovm
