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

#include "ovm/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ovm {

PositiveFamily family_from_measure(const NonNegativeMeasure& measure) {
  return PositiveFamily{
      measure.space(), measure.domain(), measure.codomain(),
      [measure](const AlgebraElement& a) { return measure.restriction(a); }};
}

ProjectionFamily projection_family_from_measure(
    const NonNegativeMeasure& measure) {
  return ProjectionFamily{
      measure.space(), measure.domain(), measure.codomain(),
      [measure](const AlgebraElement& p) {
        return SpectralMeasure(measure.restriction(p));
      }};
}

namespace {

double atomwise_norm_defect(const PovMeasure& lhs, const PovMeasure& rhs,
                            int* worst_atom) {
  double worst = 0.0;
  for (int x = 0; x < lhs.space().atom_count(); ++x) {
    const double d =
        operator_norm(lhs.atom_value(x) - rhs.atom_value(x));
    if (d > worst) {
      worst = d;
      if (worst_atom != nullptr) *worst_atom = x;
    }
  }
  return worst;
}

void record(CompatibilityReport& report, double& slot, const char* check,
            std::uint64_t seed, int atom, double defect) {
  if (defect > slot) {
    slot = defect;
    report.witnesses.push_back(FamilyWitness{check, seed, atom, defect});
  }
}

}  // namespace

CompatibilityReport check_positive_family(const PositiveFamily& family,
                                          const FamilyCheckOptions& options,
                                          const Tolerance& tol) {
  CompatibilityReport report;
  const int atoms = family.space.atom_count();

  for (int s = 0; s < options.samples; ++s) {
    const std::uint64_t seed = mix_seed(options.seed, s);
    Rng rng(seed);
    const AlgebraElement a = sample_positive(family.domain, rng);
    const AlgebraElement b = sample_positive(family.domain, rng);
    const double lambda = (s == 0) ? 0.0 : 2.0 * rng.uniform();

    const PovMeasure ea = family.evaluate(a);
    const PovMeasure eb = family.evaluate(b);
    const PovMeasure eab = family.evaluate(a + b);
    const PovMeasure ela = family.evaluate(Complex(lambda, 0.0) * a);

    // Returned measures must validate as POV measures at all.
    const PovReport va = validate_pov(ea, tol);
    const double va_defect = std::max(0.0, -va.worst_margin);
    record(report, report.measure_defect, "pov-validity", seed, va.worst_atom,
           va_defect);

    for (int x = 0; x < atoms; ++x) {
      const double add = operator_norm(
          eab.atom_value(x) - ea.atom_value(x) - eb.atom_value(x));
      record(report, report.additivity_defect, "additivity", seed, x, add);

      const double hom = operator_norm(
          ela.atom_value(x) - Complex(lambda, 0.0) * ea.atom_value(x));
      record(report, report.homogeneity_defect, "homogeneity", seed, x, hom);

      // k_Delta estimate over singletons; additivity carries it to all sets.
      const double na = operator_norm(a);
      if (na > 0.0) {
        report.bound_constant = std::max(
            report.bound_constant, operator_norm(ea.atom_value(x)) / na);
      }
    }
    const double na = operator_norm(a);
    if (na > 0.0) {
      report.bound_constant = std::max(
          report.bound_constant,
          operator_norm(ea.value(MeasurableSet::full(family.space))) / na);
    }
  }

  const double thr = tol.threshold(1.0);
  report.pass = report.additivity_defect <= thr &&
                report.homogeneity_defect <= thr &&
                report.measure_defect <= thr;
  return report;
}

NonNegativeMeasure build_from_positive_family(const PositiveFamily& family,
                                              const FamilyCheckOptions& options,
                                              const Tolerance& tol) {
  const CompatibilityReport report =
      check_positive_family(family, options, tol);
  if (!report.pass) {
    throw IncompatibleFamily(
        "build_from_positive_family: probe check failed (additivity " +
        std::to_string(report.additivity_defect) + ", homogeneity " +
        std::to_string(report.homogeneity_defect) + ")");
  }

  const int atoms = family.space.atom_count();
  const auto& units = family.domain.pattern_units();

  // Evaluate the family at the four PSD parts of each matrix unit; skip
  // zero parts, e.g. the imaginary part of a diagonal unit.
  const auto family_at = [&](const AlgebraElement& part,
                             std::vector<AlgebraElement>& out) {
    if (frobenius_norm(part.matrix()) <= 1e-14) {
      out.assign(atoms, AlgebraElement::zero(family.codomain));
      return;
    }
    const PovMeasure e = family.evaluate(part);
    out.clear();
    for (int x = 0; x < atoms; ++x) out.push_back(e.atom_value(x));
  };

  std::vector<std::vector<AlgebraElement>> maps(
      atoms, std::vector<AlgebraElement>());
  for (int x = 0; x < atoms; ++x) {
    maps[x].reserve(units.size());
  }

  const Complex i_unit(0.0, 1.0);
  std::vector<AlgebraElement> rp, rm, ip, im;
  for (const auto& [r, c] : units) {
    const AlgebraElement e_rc = AlgebraElement::unit(family.domain, r, c);
    const auto [re, imag] = cartesian_parts(e_rc);
    const auto [re_plus, re_minus] = jordan_parts(re, tol);
    const auto [im_plus, im_minus] = jordan_parts(imag, tol);
    family_at(re_plus, rp);
    family_at(re_minus, rm);
    family_at(im_plus, ip);
    family_at(im_minus, im);
    for (int x = 0; x < atoms; ++x) {
      maps[x].push_back(rp[x] - rm[x] + i_unit * ip[x] - i_unit * im[x]);
    }
  }
  return NonNegativeMeasure(family.space, family.domain, family.codomain,
                            std::move(maps));
}

namespace {

// Commuting projections P_S = U D_S U* from one per-block eigenbasis, with
// the exact lattice relation P_S1 + P_S2 = P_(S1 u S2) + P_(S1 n S2).
struct CommutingQuad {
  AlgebraElement p1, p2, p_union, p_intersection;
};

CommutingQuad sample_commuting_quad(const MatrixAlgebra& algebra, Rng& rng) {
  const int dim = algebra.ambient_dim();
  ComplexMatrix m1 = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix m2 = m1, mu = m1, mi = m1;
  for (int k = 0; k < algebra.block_count(); ++k) {
    const int o = algebra.block_offset(k);
    const int b = algebra.blocks()[k];
    const ComplexMatrix u = random_unitary(rng, b);
    ComplexMatrix d1 = ComplexMatrix::Zero(b, b);
    ComplexMatrix d2 = d1, du = d1, di = d1;
    for (int i = 0; i < b; ++i) {
      const bool in1 = rng.coin();
      const bool in2 = rng.coin();
      if (in1) d1(i, i) = 1.0;
      if (in2) d2(i, i) = 1.0;
      if (in1 || in2) du(i, i) = 1.0;
      if (in1 && in2) di(i, i) = 1.0;
    }
    m1.block(o, o, b, b) = u * d1 * u.adjoint();
    m2.block(o, o, b, b) = u * d2 * u.adjoint();
    mu.block(o, o, b, b) = u * du * u.adjoint();
    mi.block(o, o, b, b) = u * di * u.adjoint();
  }
  return CommutingQuad{element_unchecked(algebra, std::move(m1)),
                       element_unchecked(algebra, std::move(m2)),
                       element_unchecked(algebra, std::move(mu)),
                       element_unchecked(algebra, std::move(mi))};
}

}  // namespace

CompatibilityReport check_projection_family(const ProjectionFamily& family,
                                            const FamilyCheckOptions& options,
                                            const Tolerance& tol) {
  CompatibilityReport report;
  const int atoms = family.space.atom_count();
  const AlgebraElement id = AlgebraElement::identity(family.domain);
  const SpectralMeasure f_id = family.evaluate(id);

  const auto spectral_validity = [&](const SpectralMeasure& f,
                                     std::uint64_t seed) {
    const SpectralReport sub = validate_spectral(f, tol, false);
    const double defect = std::max({sub.projection_defect,
                                    sub.hermitian_defect,
                                    sub.orthogonality_defect});
    record(report, report.measure_defect, "spectral-validity", seed,
           sub.witness_atom, defect);
  };
  spectral_validity(f_id, 0);

  for (int x = 0; x < atoms; ++x) {
    report.bound_constant =
        std::max(report.bound_constant, operator_norm(f_id.atom_value(x)));
  }
  report.bound_constant = std::max(
      report.bound_constant,
      operator_norm(f_id.value(MeasurableSet::full(family.space))));

  for (int s = 0; s < options.samples; ++s) {
    const std::uint64_t seed = mix_seed(options.seed, 100 + s);
    Rng rng(seed);

    // Canonical relation P + (I - P) = I.
    const AlgebraElement p = sample_projection(family.domain, rng);
    const SpectralMeasure fp = family.evaluate(p);
    const SpectralMeasure fq = family.evaluate(id - p);
    spectral_validity(fp, seed);
    for (int x = 0; x < atoms; ++x) {
      const double rel = operator_norm(
          fp.atom_value(x) + fq.atom_value(x) - f_id.atom_value(x));
      record(report, report.linear_relation_defect, "relation-complement",
             seed, x, rel);
      report.bound_constant =
          std::max(report.bound_constant, operator_norm(fp.atom_value(x)));
    }

    // Lattice relation from a common eigenbasis.
    const CommutingQuad quad = sample_commuting_quad(family.domain, rng);
    const SpectralMeasure f1 = family.evaluate(quad.p1);
    const SpectralMeasure f2 = family.evaluate(quad.p2);
    const SpectralMeasure fu = family.evaluate(quad.p_union);
    const SpectralMeasure fi = family.evaluate(quad.p_intersection);
    for (int x = 0; x < atoms; ++x) {
      const double rel = operator_norm(f1.atom_value(x) + f2.atom_value(x) -
                                       fu.atom_value(x) - fi.atom_value(x));
      record(report, report.linear_relation_defect, "relation-lattice", seed,
             x, rel);
    }

    // Product law on commuting pairs, where PQ is itself a projection.
    const SpectralMeasure fpq = family.evaluate(quad.p1 * quad.p2);
    for (int x = 0; x < atoms; ++x) {
      for (int y = 0; y < atoms; ++y) {
        const AlgebraElement expected =
            (x == y) ? fpq.atom_value(x)
                     : AlgebraElement::zero(family.codomain);
        const double defect = operator_norm(
            f1.atom_value(x) * f2.atom_value(y) - expected);
        record(report, report.product_law_defect, "product-law", seed,
               x * atoms + y, defect);
      }
    }
  }

  const double thr = tol.threshold(1.0);
  report.pass = report.linear_relation_defect <= thr &&
                report.product_law_defect <= thr &&
                report.measure_defect <= thr;
  return report;
}

namespace {

// M_A({x}) for Hermitian A through the finite spectral decomposition,
// sum_k lambda_k F_{P_k}({x}).
std::vector<AlgebraElement> family_on_decomposition(const ProjectionFamily& family,
                                          const AlgebraElement& a,
                                          const Tolerance& tol) {
  const int atoms = family.space.atom_count();
  std::vector<AlgebraElement> out(atoms, AlgebraElement::zero(family.codomain));
  const SpectralDecomposition sd = spectral_decomposition(a, tol);
  for (const SpectralTerm& term : sd.terms) {
    if (term.eigenvalue == 0.0) continue;
    const SpectralMeasure f = family.evaluate(term.projection);
    for (int x = 0; x < atoms; ++x) {
      out[x] += Complex(term.eigenvalue, 0.0) * f.atom_value(x);
    }
  }
  return out;
}

std::vector<AlgebraElement> family_on_terms(const ProjectionFamily& family,
                                            const SpectralDecomposition& sd) {
  const int atoms = family.space.atom_count();
  std::vector<AlgebraElement> out(atoms, AlgebraElement::zero(family.codomain));
  for (const SpectralTerm& term : sd.terms) {
    if (term.eigenvalue == 0.0) continue;
    const SpectralMeasure f = family.evaluate(term.projection);
    for (int x = 0; x < atoms; ++x) {
      out[x] += Complex(term.eigenvalue, 0.0) * f.atom_value(x);
    }
  }
  return out;
}

}  // namespace

NonNegativeSpectralMeasure build_from_projection_family(
    const ProjectionFamily& family, const FamilyCheckOptions& options,
    const Tolerance& tol) {
  const CompatibilityReport report =
      check_projection_family(family, options, tol);
  if (!report.pass) {
    throw IncompatibleFamily(
        "build_from_projection_family: probe check failed (relations " +
        std::to_string(report.linear_relation_defect) + ", product law " +
        std::to_string(report.product_law_defect) + ")");
  }

  const int atoms = family.space.atom_count();
  const auto& units = family.domain.pattern_units();
  std::vector<std::vector<AlgebraElement>> maps(
      atoms, std::vector<AlgebraElement>());
  for (auto& m : maps) m.reserve(units.size());

  const Complex i_unit(0.0, 1.0);
  for (const auto& [r, c] : units) {
    if (r == c) {
      // Diagonal units are projections already.
      const SpectralMeasure f =
          family.evaluate(AlgebraElement::unit(family.domain, r, c));
      for (int x = 0; x < atoms; ++x) maps[x].push_back(f.atom_value(x));
      continue;
    }
    // E_rc = (A - iB)/2 for the Hermitian pair A = E_rc + E_cr and
    // B = i(E_rc - E_cr).
    const AlgebraElement e_rc = AlgebraElement::unit(family.domain, r, c);
    const AlgebraElement e_cr = AlgebraElement::unit(family.domain, c, r);
    const AlgebraElement herm_a = e_rc + e_cr;
    const AlgebraElement herm_b = i_unit * (e_rc - e_cr);
    const std::vector<AlgebraElement> ma = family_on_decomposition(family, herm_a, tol);
    const std::vector<AlgebraElement> mb = family_on_decomposition(family, herm_b, tol);
    for (int x = 0; x < atoms; ++x) {
      maps[x].push_back(Complex(0.5, 0.0) * (ma[x] - i_unit * mb[x]));
    }
  }
  return NonNegativeSpectralMeasure(NonNegativeMeasure(
      family.space, family.domain, family.codomain, std::move(maps)));
}

RiemannPathReport riemann_path_check(const ProjectionFamily& family,
                                     const AlgebraElement& a,
                                     const std::vector<int>& levels,
                                     const FamilyCheckOptions& options,
                                     const Tolerance& tol) {
  const CompatibilityReport compat =
      check_projection_family(family, options, tol);
  if (!compat.pass) {
    throw IncompatibleFamily("riemann_path_check: family is not compatible");
  }
  const double k_delta = compat.bound_constant;
  const int atoms = family.space.atom_count();

  const std::vector<AlgebraElement> reference = family_on_decomposition(family, a, tol);
  AlgebraElement reference_total = AlgebraElement::zero(family.codomain);
  for (const AlgebraElement& v : reference) reference_total += v;

  RiemannPathReport report;
  report.k_delta = k_delta;
  report.pass = true;
  for (int level : levels) {
    const RiemannSum rs = riemann_sum(a, level, tol);
    const std::vector<AlgebraElement> binned =
        family_on_terms(family, rs.terms);
    double defect = 0.0;
    AlgebraElement binned_total = AlgebraElement::zero(family.codomain);
    for (int x = 0; x < atoms; ++x) {
      defect = std::max(defect, operator_norm(binned[x] - reference[x]));
      binned_total += binned[x];
    }
    defect = std::max(defect, operator_norm(binned_total - reference_total));
    const double bound = 2.0 * k_delta / static_cast<double>(level);
    report.points.push_back(RiemannPathPoint{level, defect, bound});
    if (defect > bound + tol.absolute) report.pass = false;
  }
  return report;
}

}  // namespace ovm
