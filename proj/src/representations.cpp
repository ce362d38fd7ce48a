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

#include "ovm/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ovm {

Representation::Representation(
    FiniteMeasurableSpace space, MatrixAlgebra domain, MatrixAlgebra codomain,
    std::vector<std::vector<AlgebraElement>> basis_action)
    : space_(space), domain_(std::move(domain)), codomain_(std::move(codomain)),
      basis_action_(std::move(basis_action)) {
  if (static_cast<int>(basis_action_.size()) != space_.atom_count()) {
    throw DomainMismatch("Representation: one action row per atom required");
  }
  const int units = domain_.unit_count();
  for (const auto& per_atom : basis_action_) {
    if (static_cast<int>(per_atom.size()) != units) {
      throw DomainMismatch(
          "Representation: one action per domain matrix unit required");
    }
    for (const AlgebraElement& v : per_atom) {
      if (v.algebra() != codomain_) {
        throw DomainMismatch("Representation: action outside the codomain");
      }
    }
  }
}

AlgebraElement Representation::apply_atom(int atom,
                                          const AlgebraElement& a) const {
  if (a.algebra() != domain_) {
    throw DomainMismatch("Representation::apply_atom: operand outside the "
                         "domain algebra");
  }
  const int d2 = codomain_.ambient_dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d2, d2);
  const auto& units = domain_.pattern_units();
  for (std::size_t u = 0; u < units.size(); ++u) {
    const Complex coeff = a.matrix()(units[u].first, units[u].second);
    if (coeff != Complex(0.0, 0.0)) {
      acc += coeff * basis_action_[atom][u].matrix();
    }
  }
  return element_unchecked(codomain_, std::move(acc));
}

AlgebraElement Representation::apply(const OperatorFunction& f) const {
  if (f.space() != space_ || f.algebra() != domain_) {
    throw DomainMismatch("Representation::apply: function outside C(X, W1)");
  }
  AlgebraElement acc = AlgebraElement::zero(codomain_);
  for (int x = 0; x < space_.atom_count(); ++x) {
    acc += apply_atom(x, f.at(x));
  }
  return acc;
}

int RepresentationBlueprint::total_dim() const {
  int total = 0;
  for (int k : multiplicities) total += k * domain.ambient_dim();
  return total;
}

RepresentationBlueprint identity_blueprint(const FiniteMeasurableSpace& space,
                                           const MatrixAlgebra& domain) {
  const std::vector<int> ones(space.atom_count(), 1);
  const int total = space.atom_count() * domain.ambient_dim();
  return RepresentationBlueprint{space, domain, ones,
                                 ComplexMatrix::Identity(total, total)};
}

RepresentationBlueprint random_blueprint(std::uint64_t seed,
                                         const BlueprintLimits& limits) {
  Rng rng(seed);
  const int atoms = 1 + static_cast<int>(rng.integer(limits.max_atoms));
  const FiniteMeasurableSpace space(atoms);

  // Random composition of a random ambient dimension.
  const int ambient =
      1 + static_cast<int>(rng.integer(limits.max_domain_ambient));
  std::vector<int> blocks;
  int remaining = ambient;
  while (remaining > 0) {
    const int b = 1 + static_cast<int>(rng.integer(remaining));
    blocks.push_back(b);
    remaining -= b;
  }
  const MatrixAlgebra domain(blocks);

  std::vector<int> multiplicities(atoms, 0);
  for (int x = 0; x < atoms; ++x) {
    multiplicities[x] = static_cast<int>(rng.integer(3));
  }
  if (std::accumulate(multiplicities.begin(), multiplicities.end(), 0) == 0) {
    multiplicities[0] = 1;
  }
  // Trim until the total space fits the limit.
  const auto total = [&]() {
    int t = 0;
    for (int k : multiplicities) t += k * ambient;
    return t;
  };
  int guard = 0;
  while (total() > limits.max_total_dim && guard++ < 64) {
    auto it = std::max_element(multiplicities.begin(), multiplicities.end());
    if (*it > 0) --(*it);
    if (std::accumulate(multiplicities.begin(), multiplicities.end(), 0) ==
        0) {
      multiplicities[0] = 1;
      break;
    }
  }

  RepresentationBlueprint bp{space, domain, multiplicities,
                             ComplexMatrix()};
  bp.intertwiner = random_unitary(rng, bp.total_dim());
  return bp;
}

Representation generate_representation(
    const RepresentationBlueprint& blueprint) {
  const int atoms = blueprint.space.atom_count();
  if (static_cast<int>(blueprint.multiplicities.size()) != atoms) {
    throw BadConfig("generate_representation: one multiplicity per atom");
  }
  for (int k : blueprint.multiplicities) {
    if (k < 0) throw BadConfig("generate_representation: negative multiplicity");
  }
  const int total = blueprint.total_dim();
  if (total < 1) {
    throw EmptyBlueprint("generate_representation: total dimension is zero");
  }
  const ComplexMatrix& u = blueprint.intertwiner;
  if (u.rows() != total || u.cols() != total) {
    throw BadConfig("generate_representation: intertwiner has wrong shape");
  }
  if ((u.adjoint() * u - ComplexMatrix::Identity(total, total)).norm() >
      1e-12) {
    throw BadConfig("generate_representation: intertwiner is not unitary");
  }

  const MatrixAlgebra codomain = MatrixAlgebra::full(total);
  const int d1 = blueprint.domain.ambient_dim();

  std::vector<int> slot_offset(atoms, 0);
  int off = 0;
  for (int x = 0; x < atoms; ++x) {
    slot_offset[x] = off;
    off += blueprint.multiplicities[x] * d1;
  }

  std::vector<std::vector<AlgebraElement>> action(atoms);
  for (int x = 0; x < atoms; ++x) {
    const int k = blueprint.multiplicities[x];
    for (const auto& [r, c] : blueprint.domain.pattern_units()) {
      ComplexMatrix big = ComplexMatrix::Zero(total, total);
      // E_rc (x) I_k placed at this atom's slot; index (i, t) -> i*k + t.
      for (int t = 0; t < k; ++t) {
        big(slot_offset[x] + r * k + t, slot_offset[x] + c * k + t) = 1.0;
      }
      action[x].push_back(
          element_unchecked(codomain, u * big * u.adjoint()));
    }
  }

  Representation rep(blueprint.space, blueprint.domain, codomain,
                     std::move(action));
  // The block construction is a unital *-representation by arithmetic.
  rep.certified_unital_ = true;
  rep.certified_multiplicative_ = true;
  rep.certified_star_preserving_ = true;
  return rep;
}

namespace {

OperatorFunction sample_unit_function(const FiniteMeasurableSpace& space,
                                      const MatrixAlgebra& algebra, Rng& rng) {
  std::vector<AlgebraElement> values;
  for (int x = 0; x < space.atom_count(); ++x) {
    values.push_back(sample_element(algebra, rng));
  }
  OperatorFunction f(space, algebra, std::move(values));
  const double sup = f.sup_norm();
  if (sup > 0.0) f = Complex(1.0 / sup, 0.0) * f;
  return f;
}

}  // namespace

CertificationReport certify_representation(Representation& rep, int samples,
                                           std::uint64_t seed,
                                           const Tolerance& tol) {
  CertificationReport report;
  const FiniteMeasurableSpace& space = rep.space();
  const MatrixAlgebra& domain = rep.domain();
  const int atoms = space.atom_count();
  const int units = domain.unit_count();

  // Unitality.
  const OperatorFunction one = OperatorFunction::constant(
      space, AlgebraElement::identity(domain));
  report.unitality_defect = operator_norm(
      rep.apply(one) - AlgebraElement::identity(rep.codomain()));
  report.norm_estimate = operator_norm(rep.apply(one));

  // Multiplicativity and *-preservation on the canonical basis:
  // (chi_x E_ab)(chi_y E_cd) = delta_xy delta_bc chi_x E_ad.
  const auto& pattern = domain.pattern_units();
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < units; ++u) {
      const auto [a, b] = pattern[u];
      const AlgebraElement star_lhs =
          rep.apply_atom(x, AlgebraElement::unit(domain, b, a));
      report.star_defect = std::max(
          report.star_defect,
          operator_norm(star_lhs - rep.basis_action(x, u).adjoint()));
      for (int y = 0; y < atoms; ++y) {
        for (int v = 0; v < units; ++v) {
          const auto [c, d] = pattern[v];
          AlgebraElement expected = AlgebraElement::zero(rep.codomain());
          if (x == y && b == c) {
            const ComplexMatrix prod_unit =
                AlgebraElement::unit(domain, a, b).matrix() *
                AlgebraElement::unit(domain, c, d).matrix();
            if (prod_unit.norm() > 0.0) {
              expected = rep.apply_atom(
                  x, element_unchecked(domain, prod_unit));
            }
          }
          const double defect = operator_norm(
              rep.basis_action(x, u) * rep.basis_action(y, v) - expected);
          report.multiplicativity_defect =
              std::max(report.multiplicativity_defect, defect);
        }
      }
    }
  }

  // Sampled functions with sup norm one; rho(F G) vs rho(F) rho(G) and
  // rho(F*) vs rho(F)*, plus the boundedness witness.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const OperatorFunction f = sample_unit_function(space, domain, rng);
    const OperatorFunction g = sample_unit_function(space, domain, rng);
    report.multiplicativity_defect = std::max(
        report.multiplicativity_defect,
        operator_norm(rep.apply(f.pointwise_product(g)) -
                      rep.apply(f) * rep.apply(g)));
    report.star_defect =
        std::max(report.star_defect,
                 operator_norm(rep.apply(f.adjoint()) -
                               rep.apply(f).adjoint()));
    report.norm_estimate =
        std::max(report.norm_estimate, operator_norm(rep.apply(f)));
  }

  const double thr = tol.threshold(1.0);
  rep.certified_unital_ = report.unitality_defect <= thr;
  rep.certified_multiplicative_ = report.multiplicativity_defect <= thr;
  rep.certified_star_preserving_ = report.star_defect <= thr;
  report.pass = rep.certified();
  return report;
}

NonNegativeSpectralMeasure rep_to_measure(const Representation& rep,
                                          const Tolerance& tol) {
  Representation copy = rep;
  if (!copy.certified()) {
    const CertificationReport report = certify_representation(copy);
    if (!report.pass) {
      throw NotARepresentation(
          "rep_to_measure: certification failed (unitality " +
          std::to_string(report.unitality_defect) + ", multiplicativity " +
          std::to_string(report.multiplicativity_defect) + ", star " +
          std::to_string(report.star_defect) + ")");
    }
  }

  const int atoms = rep.space().atom_count();
  std::vector<std::vector<AlgebraElement>> maps(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < rep.domain().unit_count(); ++u) {
      maps[x].push_back(rep.basis_action(x, u));
    }
  }
  NonNegativeSpectralMeasure measure(NonNegativeMeasure(
      rep.space(), rep.domain(), rep.codomain(), std::move(maps)));

  const NonNegSpectralReport validation =
      validate_nonneg_spectral(measure, {}, tol);
  if (!validation.pass ||
      normalization_defect(measure) > tol.threshold(1.0)) {
    throw NotARepresentation(
        "rep_to_measure: derived measure fails validation (spectral " +
        std::to_string(validation.spectral_defect) + ", product " +
        std::to_string(validation.product_defect) + ", normalization " +
        std::to_string(normalization_defect(measure)) + ")");
  }
  return measure;
}

Representation measure_to_rep(const NonNegativeSpectralMeasure& measure,
                              const Tolerance& tol) {
  const NonNegSpectralReport validation =
      validate_nonneg_spectral(measure, {}, tol);
  if (!validation.pass) {
    throw InvalidMeasure(
        "measure_to_rep: measure fails validation (spectral " +
        std::to_string(validation.spectral_defect) + ", product " +
        std::to_string(validation.product_defect) + ")");
  }
  const double norm_defect = normalization_defect(measure);
  if (norm_defect > tol.threshold(1.0)) {
    throw InvalidMeasure("measure_to_rep: measure is not normalized (defect " +
                         std::to_string(norm_defect) + ")");
  }

  const int atoms = measure.space().atom_count();
  std::vector<std::vector<AlgebraElement>> action(atoms);
  for (int x = 0; x < atoms; ++x) {
    for (int u = 0; u < measure.domain().unit_count(); ++u) {
      action[x].push_back(measure.basis_value(x, u));
    }
  }
  Representation rep(measure.space(), measure.domain(), measure.codomain(),
                     std::move(action));
  const CertificationReport report = certify_representation(rep);
  if (!report.pass) {
    throw InvalidMeasure(
        "measure_to_rep: induced map fails certification (unitality " +
        std::to_string(report.unitality_defect) + ", multiplicativity " +
        std::to_string(report.multiplicativity_defect) + ", star " +
        std::to_string(report.star_defect) + ")");
  }
  return rep;
}

namespace {

double basis_defect(const Representation& a, const Representation& b) {
  double worst = 0.0;
  for (int x = 0; x < a.space().atom_count(); ++x) {
    for (int u = 0; u < a.domain().unit_count(); ++u) {
      worst = std::max(worst,
                       operator_norm(a.basis_action(x, u) -
                                     b.basis_action(x, u)));
    }
  }
  return worst;
}

double basis_defect(const NonNegativeMeasure& a, const NonNegativeMeasure& b) {
  double worst = 0.0;
  for (int x = 0; x < a.space().atom_count(); ++x) {
    for (int u = 0; u < a.domain().unit_count(); ++u) {
      worst = std::max(worst, operator_norm(a.basis_value(x, u) -
                                            b.basis_value(x, u)));
    }
  }
  return worst;
}

}  // namespace

RoundTripDefects roundtrip_defect(std::uint64_t seed,
                                  const BlueprintLimits& limits,
                                  const Tolerance& tol) {
  RoundTripDefects defects;

  const Representation rho =
      generate_representation(random_blueprint(mix_seed(seed, 1), limits));
  const NonNegativeSpectralMeasure m = rep_to_measure(rho, tol);
  const Representation rho_back = measure_to_rep(m, tol);
  defects.rep_side = basis_defect(rho, rho_back);

  const Representation rho2 =
      generate_representation(random_blueprint(mix_seed(seed, 2), limits));
  const NonNegativeSpectralMeasure m2 = rep_to_measure(rho2, tol);
  const NonNegativeSpectralMeasure m2_back =
      rep_to_measure(measure_to_rep(m2, tol), tol);
  defects.measure_side = basis_defect(m2, m2_back);
  return defects;
}

}  // namespace ovm
