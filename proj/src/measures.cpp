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

#include "ovm/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ovm {

FiniteMeasurableSpace::FiniteMeasurableSpace(int atom_count)
    : atom_count_(atom_count) {
  if (atom_count < 1) {
    throw std::invalid_argument("FiniteMeasurableSpace: atom_count must be >= 1");
  }
  if (atom_count > 64) {
    throw std::invalid_argument(
        "FiniteMeasurableSpace: atom_count above 64 is not supported");
  }
}

MeasurableSet MeasurableSet::empty(const FiniteMeasurableSpace& space) {
  return MeasurableSet(space.atom_count(), 0);
}

MeasurableSet MeasurableSet::full(const FiniteMeasurableSpace& space) {
  const int n = space.atom_count();
  const std::uint64_t bits =
      (n == 64) ? ~0ULL : ((1ULL << n) - 1ULL);
  return MeasurableSet(n, bits);
}

MeasurableSet MeasurableSet::singleton(const FiniteMeasurableSpace& space,
                                       int atom) {
  if (atom < 0 || atom >= space.atom_count()) {
    throw std::invalid_argument("MeasurableSet::singleton: atom out of range");
  }
  return MeasurableSet(space.atom_count(), 1ULL << atom);
}

MeasurableSet MeasurableSet::of(const FiniteMeasurableSpace& space,
                                const std::vector<int>& atoms) {
  MeasurableSet s = empty(space);
  for (int a : atoms) s = s.unite(singleton(space, a));
  return s;
}

int MeasurableSet::size() const {
  int count = 0;
  for (int i = 0; i < atom_count_; ++i) count += contains(i) ? 1 : 0;
  return count;
}

MeasurableSet MeasurableSet::unite(const MeasurableSet& other) const {
  if (atom_count_ != other.atom_count_) {
    throw DomainMismatch("MeasurableSet::unite: different spaces");
  }
  return MeasurableSet(atom_count_, bits_ | other.bits_);
}

MeasurableSet MeasurableSet::intersect(const MeasurableSet& other) const {
  if (atom_count_ != other.atom_count_) {
    throw DomainMismatch("MeasurableSet::intersect: different spaces");
  }
  return MeasurableSet(atom_count_, bits_ & other.bits_);
}

MeasurableSet MeasurableSet::complement() const {
  const std::uint64_t all =
      (atom_count_ == 64) ? ~0ULL : ((1ULL << atom_count_) - 1ULL);
  return MeasurableSet(atom_count_, all & ~bits_);
}

PovMeasure::PovMeasure(FiniteMeasurableSpace space, MatrixAlgebra codomain,
                       std::vector<AlgebraElement> atom_values)
    : space_(space), codomain_(std::move(codomain)),
      atom_values_(std::move(atom_values)) {
  if (static_cast<int>(atom_values_.size()) != space_.atom_count()) {
    throw DomainMismatch("PovMeasure: one value per atom required");
  }
  for (const AlgebraElement& v : atom_values_) {
    if (v.algebra() != codomain_) {
      throw DomainMismatch("PovMeasure: atom value outside the codomain");
    }
  }
}

AlgebraElement PovMeasure::value(const MeasurableSet& set) const {
  if (set.atom_count() != space_.atom_count()) {
    throw DomainMismatch("PovMeasure::value: set over a different space");
  }
  AlgebraElement sum = AlgebraElement::zero(codomain_);
  for (int x = 0; x < space_.atom_count(); ++x) {
    if (set.contains(x)) sum += atom_values_[x];
  }
  return sum;
}

NonNegativeMeasure::NonNegativeMeasure(
    FiniteMeasurableSpace space, MatrixAlgebra domain, MatrixAlgebra codomain,
    std::vector<std::vector<AlgebraElement>> atom_maps)
    : space_(space), domain_(std::move(domain)), codomain_(std::move(codomain)),
      atom_maps_(std::move(atom_maps)) {
  if (static_cast<int>(atom_maps_.size()) != space_.atom_count()) {
    throw DomainMismatch("NonNegativeMeasure: one map per atom required");
  }
  const int units = domain_.unit_count();
  for (const auto& per_atom : atom_maps_) {
    if (static_cast<int>(per_atom.size()) != units) {
      throw DomainMismatch(
          "NonNegativeMeasure: one basis value per domain matrix unit required");
    }
    for (const AlgebraElement& v : per_atom) {
      if (v.algebra() != codomain_) {
        throw DomainMismatch("NonNegativeMeasure: basis value outside codomain");
      }
    }
  }
}

AlgebraElement NonNegativeMeasure::apply_atom(int atom,
                                              const AlgebraElement& a) const {
  if (a.algebra() != domain_) {
    throw DomainMismatch("NonNegativeMeasure::apply_atom: operand outside the "
                         "domain algebra");
  }
  const int d2 = codomain_.ambient_dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d2, d2);
  const auto& units = domain_.pattern_units();
  for (std::size_t u = 0; u < units.size(); ++u) {
    const Complex coeff = a.matrix()(units[u].first, units[u].second);
    if (coeff != Complex(0.0, 0.0)) {
      acc += coeff * atom_maps_[atom][u].matrix();
    }
  }
  return element_unchecked(codomain_, std::move(acc));
}

AlgebraElement NonNegativeMeasure::evaluate(const MeasurableSet& set,
                                            const AlgebraElement& a) const {
  if (set.atom_count() != space_.atom_count()) {
    throw DomainMismatch("NonNegativeMeasure::evaluate: set over a different "
                         "space");
  }
  AlgebraElement sum = AlgebraElement::zero(codomain_);
  for (int x = 0; x < space_.atom_count(); ++x) {
    if (set.contains(x)) sum += apply_atom(x, a);
  }
  return sum;
}

PovMeasure NonNegativeMeasure::restriction(const AlgebraElement& a) const {
  std::vector<AlgebraElement> values;
  values.reserve(space_.atom_count());
  for (int x = 0; x < space_.atom_count(); ++x) {
    values.push_back(apply_atom(x, a));
  }
  return PovMeasure(space_, codomain_, std::move(values));
}

double NonNegativeMeasure::identity_mass_norm() const {
  return operator_norm(
      evaluate(MeasurableSet::full(space_), AlgebraElement::identity(domain_)));
}

double normalization_defect(const NonNegativeMeasure& measure) {
  const AlgebraElement mass = measure.evaluate(
      MeasurableSet::full(measure.space()),
      AlgebraElement::identity(measure.domain()));
  return operator_norm(mass - AlgebraElement::identity(measure.codomain()));
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

PovReport validate_pov(const PovMeasure& measure, const Tolerance& tol) {
  PovReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  const int n = measure.space().atom_count();
  for (int x = 0; x < n; ++x) {
    const PsdResult r = is_psd(measure.atom_value(x).matrix(), tol);
    report.atom_margins.push_back(r.margin);
    if (r.margin < report.worst_margin) {
      report.worst_margin = r.margin;
      report.worst_atom = x;
    }
  }
  report.pass = report.worst_margin >= -tol.absolute;
  return report;
}

SpectralReport validate_spectral(const SpectralMeasure& measure,
                                 const Tolerance& tol, bool normalized) {
  SpectralReport report;
  const int n = measure.space().atom_count();
  for (int x = 0; x < n; ++x) {
    const ComplexMatrix& p = measure.atom_value(x).matrix();
    const double herm = operator_norm(ComplexMatrix(p - p.adjoint()));
    const double proj = operator_norm(ComplexMatrix(p * p - p));
    if (std::max(herm, proj) >
        std::max(report.hermitian_defect, report.projection_defect)) {
      report.witness_atom = x;
    }
    report.hermitian_defect = std::max(report.hermitian_defect, herm);
    report.projection_defect = std::max(report.projection_defect, proj);
    for (int y = x + 1; y < n; ++y) {
      const double orth = operator_norm(
          ComplexMatrix(p * measure.atom_value(y).matrix()));
      if (orth > report.orthogonality_defect) {
        report.orthogonality_defect = orth;
        report.witness_atom = x;
        report.witness_atom_b = y;
      }
    }
  }
  if (normalized) {
    report.normalization_defect = operator_norm(
        measure.value(MeasurableSet::full(measure.space())) -
        AlgebraElement::identity(measure.codomain()));
  }
  const double thr = tol.threshold(1.0);
  report.pass = report.projection_defect <= thr &&
                report.hermitian_defect <= thr &&
                report.orthogonality_defect <= thr &&
                report.normalization_defect <= thr;
  return report;
}

namespace {

struct BlockView {
  int offset = 0;
  int dim = 0;
  int unit_base = 0;  // index of this block's first matrix unit
};

std::vector<BlockView> domain_block_views(const MatrixAlgebra& domain) {
  std::vector<BlockView> views;
  int base = 0;
  for (int k = 0; k < domain.block_count(); ++k) {
    const int b = domain.blocks()[k];
    views.push_back(BlockView{domain.block_offset(k), b, base});
    base += b * b;
  }
  return views;
}

ComplexMatrix rank_one_image(const NonNegativeMeasure& m, int atom,
                             const BlockView& view, const ComplexVector& v) {
  const int d2 = m.codomain().ambient_dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d2, d2);
  for (int r = 0; r < view.dim; ++r) {
    for (int c = 0; c < view.dim; ++c) {
      const Complex coeff = v[r] * std::conj(v[c]);
      if (coeff == Complex(0.0, 0.0)) continue;
      acc += coeff * m.basis_value(atom, view.unit_base + r * view.dim + c)
                         .matrix();
    }
  }
  return acc;
}

struct MinEig {
  double value = 0.0;
  ComplexVector vector;
};

MinEig min_eig(const ComplexMatrix& h) {
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("min_eig: solver did not converge");
  }
  return MinEig{solver.eigenvalues()[0], solver.eigenvectors().col(0)};
}

struct SearchOutcome {
  double margin = std::numeric_limits<double>::infinity();
  ComplexVector witness;
};

// Projected gradient descent for min_{|v| = 1} lambda_min(m^x(v v*)) on one
// domain block. Rank-one positives generate the PSD cone of the block
// algebra, so a nonnegative minimum here certifies positivity of the block
// restriction up to tolerance, and any negative minimum is a sound witness.
SearchOutcome rank_one_search_block(const NonNegativeMeasure& m, int atom,
                                    const BlockView& view,
                                    const RankOneOptions& opt) {
  const int b = view.dim;
  const int starts = std::max(opt.starts, b + 1);
  std::vector<double> margins(starts,
                              std::numeric_limits<double>::infinity());
  std::vector<ComplexVector> finals(starts);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opt.workers) \
    if (opt.workers > 1)
#endif
  for (int s = 0; s < starts; ++s) {
    ComplexVector v(b);
    if (s < b) {
      v.setZero();
      v[s] = Complex(1.0, 0.0);
    } else if (s == b) {
      v.setConstant(Complex(1.0, 0.0));
    } else {
      Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(s)));
      for (int i = 0; i < b; ++i) v[i] = rng.complex_gaussian();
    }
    v.normalize();

    MinEig f = min_eig(rank_one_image(m, atom, view, v));
    double best = f.value;
    ComplexVector best_v = v;
    double eta = opt.step_size;

    for (int step = 0; step < opt.steps; ++step) {
      // Wirtinger gradient of v |-> u* m(v v*) u at the current minimizer u.
      ComplexVector grad = ComplexVector::Zero(b);
      for (int r = 0; r < b; ++r) {
        for (int c = 0; c < b; ++c) {
          const ComplexMatrix& unit_value =
              m.basis_value(atom, view.unit_base + r * view.dim + c).matrix();
          const Complex coeff =
              (f.vector.adjoint() * unit_value * f.vector)(0, 0);
          grad[c] += coeff * v[r];
        }
      }
      bool moved = false;
      while (eta >= 1e-9) {
        ComplexVector w = v - eta * grad;
        const double n = w.norm();
        if (n < 1e-14) {
          eta *= 0.5;
          continue;
        }
        w /= n;
        const MinEig fw = min_eig(rank_one_image(m, atom, view, w));
        if (fw.value < best - 1e-16) {
          v = w;
          f = fw;
          best = fw.value;
          best_v = v;
          eta *= 1.2;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) break;
    }
    margins[s] = best;
    finals[s] = best_v;
  }

  SearchOutcome out;
  for (int s = 0; s < starts; ++s) {
    if (margins[s] < out.margin) {
      out.margin = margins[s];
      out.witness = finals[s];
    }
  }
  return out;
}

double basis_scale(const NonNegativeMeasure& m, int atom) {
  double scale = 0.0;
  for (int u = 0; u < m.domain().unit_count(); ++u) {
    scale = std::max(scale, frobenius_norm(m.basis_value(atom, u).matrix()));
  }
  return scale;
}

}  // namespace

ComplexMatrix choi_matrix(const NonNegativeMeasure& measure, int atom,
                          int domain_block) {
  const auto views = domain_block_views(measure.domain());
  const BlockView& view = views.at(domain_block);
  const int d2 = measure.codomain().ambient_dim();
  ComplexMatrix choi = ComplexMatrix::Zero(view.dim * d2, view.dim * d2);
  for (int r = 0; r < view.dim; ++r) {
    for (int c = 0; c < view.dim; ++c) {
      choi.block(r * d2, c * d2, d2, d2) =
          measure.basis_value(atom, view.unit_base + r * view.dim + c)
              .matrix();
    }
  }
  return choi;
}

PositivityReport validate_nonneg(const NonNegativeMeasure& measure,
                                 PositivityPolicy policy, const Tolerance& tol,
                                 const RankOneOptions& options) {
  PositivityReport report;
  report.pass = true;
  report.sound = true;
  report.worst_margin = std::numeric_limits<double>::infinity();

  const auto views = domain_block_views(measure.domain());
  const auto& units = measure.domain().pattern_units();

  for (int atom = 0; atom < measure.space().atom_count(); ++atom) {
    AtomPositivity ap;
    ap.atom = atom;
    const double scale = std::max(1.0, basis_scale(measure, atom));

    // A positive map sends Hermitian to Hermitian, i.e. m(E_rc)* = m(E_cr);
    // a violation is already a sound rejection.
    for (const BlockView& view : views) {
      for (int r = 0; r < view.dim; ++r) {
        for (int c = 0; c < view.dim; ++c) {
          const ComplexMatrix diff =
              measure.basis_value(atom, view.unit_base + r * view.dim + c)
                  .matrix()
                  .adjoint() -
              measure.basis_value(atom, view.unit_base + c * view.dim + r)
                  .matrix();
          ap.hermiticity_defect =
              std::max(ap.hermiticity_defect, operator_norm(diff));
        }
      }
    }
    (void)units;
    if (ap.hermiticity_defect > tol.threshold(scale)) {
      ap.status = AtomPositivityStatus::Fail;
      report.atoms.push_back(ap);
      report.pass = false;
      report.worst_margin = std::min(report.worst_margin,
                                     -ap.hermiticity_defect);
      continue;
    }

    bool decided = false;
    if (policy == PositivityPolicy::ChoiCertificate ||
        policy == PositivityPolicy::ChoiThenRankOne) {
      double choi_margin = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < views.size(); ++k) {
        const ComplexMatrix choi =
            choi_matrix(measure, atom, static_cast<int>(k));
        choi_margin =
            std::min(choi_margin, min_eig(choi).value);
      }
      ap.choi_margin = choi_margin;
      if (choi_margin >= -tol.threshold(scale)) {
        ap.status = AtomPositivityStatus::PassCompletelyPositive;
        report.worst_margin = std::min(report.worst_margin, choi_margin);
        decided = true;
      } else if (policy == PositivityPolicy::ChoiCertificate) {
        // Not completely positive; positivity is undecided by this policy.
        ap.status = AtomPositivityStatus::Inconclusive;
        report.pass = false;
        report.sound = false;
        decided = true;
      }
    }

    if (!decided) {
      double margin = std::numeric_limits<double>::infinity();
      std::optional<PositivityWitness> witness;
      for (std::size_t k = 0; k < views.size(); ++k) {
        const SearchOutcome outcome =
            rank_one_search_block(measure, atom, views[k], options);
        if (outcome.margin < margin) {
          margin = outcome.margin;
          witness = PositivityWitness{static_cast<int>(k), outcome.witness,
                                      outcome.margin};
        }
      }
      ap.search_margin = margin;
      report.worst_margin = std::min(report.worst_margin, margin);
      if (margin < -tol.threshold(scale)) {
        ap.status = AtomPositivityStatus::Fail;
        ap.witness = witness;
        report.pass = false;
      } else {
        ap.status = AtomPositivityStatus::PassSearch;
        report.sound = false;  // tolerance-qualified, not certified
      }
    }
    report.atoms.push_back(ap);
  }
  if (report.atoms.empty()) report.worst_margin = 0.0;
  return report;
}

NonNegSpectralReport validate_nonneg_spectral(
    const NonNegativeSpectralMeasure& measure,
    const NonNegSpectralOptions& options, const Tolerance& tol) {
  NonNegSpectralReport report;
  const MatrixAlgebra& domain = measure.domain();

  // Probe restrictions M_P: the canonical diagonal matrix units first, then
  // the identity, then seeded random projections.
  std::vector<AlgebraElement> probes;
  for (int i = 0; i < domain.ambient_dim(); ++i) {
    probes.push_back(AlgebraElement::unit(domain, i, i));
  }
  probes.push_back(AlgebraElement::identity(domain));
  for (int s = 0; s < options.projection_samples; ++s) {
    probes.push_back(sample_projection(
        domain, mix_seed(options.seed, 1000 + static_cast<std::uint64_t>(s))));
  }

  for (const AlgebraElement& p : probes) {
    const SpectralMeasure restricted(measure.restriction(p));
    const SpectralReport sub = validate_spectral(restricted, tol, false);
    const double defect =
        std::max({sub.projection_defect, sub.hermitian_defect,
                  sub.orthogonality_defect});
    if (defect > report.spectral_defect) {
      report.spectral_defect = defect;
      report.spectral_witness_atom = sub.witness_atom;
    }
  }

  // Product law M_P({x}) M_Q({y}) = M_PQ({x} n {y}) on every atom pair; by
  // finite additivity this extends to all measurable sets.
  const int n = measure.space().atom_count();
  for (int s = 0; s < options.projection_samples; ++s) {
    const std::uint64_t pair_seed =
        mix_seed(options.seed, 2000 + static_cast<std::uint64_t>(s));
    Rng rng(pair_seed);
    AlgebraElement p = AlgebraElement::identity(domain);
    AlgebraElement q = p;
    if (options.include_noncommuting && s % 2 == 1) {
      p = sample_projection(domain, rng);
      q = sample_projection(domain, rng);
    } else {
      std::tie(p, q) = sample_commuting_projections(domain, rng);
    }
    const AlgebraElement pq = p * q;
    for (int x = 0; x < n; ++x) {
      const AlgebraElement mpx = measure.apply_atom(x, p);
      for (int y = 0; y < n; ++y) {
        AlgebraElement expected = AlgebraElement::zero(measure.codomain());
        if (x == y) expected = measure.apply_atom(x, pq);
        const double defect = operator_norm(
            mpx * measure.apply_atom(y, q) - expected);
        if (defect > report.product_defect) {
          report.product_defect = defect;
          report.product_witness = ProductLawWitness{pair_seed, x, y, defect};
        }
      }
    }
  }

  report.positivity =
      validate_nonneg(measure, options.policy, tol, options.rank_one);

  const double thr = tol.threshold(1.0);
  report.pass = report.spectral_defect <= thr &&
                report.product_defect <= thr && report.positivity.pass;
  return report;
}

// ---------------------------------------------------------------------------
// Semivariation
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::int64_t, 13> kBellNumbers = {
    1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};

void for_each_partition(int n,
                        const std::function<void(const std::vector<int>&,
                                                 int)>& callback) {
  std::vector<int> assign(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      callback(assign, max_used + 1);
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      assign[i] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return;
  assign[0] = 0;
  rec(1, 0);
}

std::vector<AlgebraElement> candidate_pool(const MatrixAlgebra& domain,
                                           std::uint64_t seed) {
  std::vector<AlgebraElement> pool;
  const AlgebraElement id = AlgebraElement::identity(domain);
  pool.push_back(id);
  pool.push_back(Complex(-1.0, 0.0) * id);
  pool.push_back(Complex(0.0, 1.0) * id);
  Rng rng(seed);
  for (int j = 0; j < 3; ++j) {
    pool.push_back(sample_unitary_element(domain, rng));
    pool.push_back(sample_positive(domain, rng));
    const AlgebraElement p = sample_projection(domain, rng);
    pool.push_back(Complex(2.0, 0.0) * p - id);  // Hermitian unitary
    pool.push_back(p);
  }
  return pool;
}

}  // namespace

SemivariationBounds semivariation(const NonNegativeMeasure& measure,
                                  const SemivariationOptions& options) {
  const int n = measure.space().atom_count();
  SemivariationBounds bounds;
  bounds.upper = 4.0 * measure.identity_mass_norm();

  const std::vector<AlgebraElement> pool =
      candidate_pool(measure.domain(), options.seed);
  const int d2 = measure.codomain().ambient_dim();

  // Per-atom images of every candidate; assignments then cost O(n d2^2).
  std::vector<std::vector<ComplexMatrix>> images(n);
  for (int x = 0; x < n; ++x) {
    for (const AlgebraElement& cand : pool) {
      images[x].push_back(measure.apply_atom(x, cand).matrix());
    }
  }

  double lower = 0.0;
  const auto evaluate_assignment =
      [&](const std::vector<int>& part_of_atom,
          const std::vector<int>& candidate_of_part) {
        ComplexMatrix sum = ComplexMatrix::Zero(d2, d2);
        for (int x = 0; x < n; ++x) {
          sum += images[x][candidate_of_part[part_of_atom[x]]];
        }
        lower = std::max(lower, operator_norm(sum));
      };

  Rng rng(mix_seed(options.seed, 0xA551ULL));
  const auto try_partition = [&](const std::vector<int>& part_of_atom,
                                 int parts, int rounds) {
    std::vector<int> choice(parts, 0);  // all-identity candidate
    evaluate_assignment(part_of_atom, choice);
    for (int round = 0; round < rounds; ++round) {
      for (int p = 0; p < parts; ++p) {
        choice[p] = static_cast<int>(rng.integer(pool.size()));
      }
      evaluate_assignment(part_of_atom, choice);
    }
  };

  if (options.strategy == SemivariationStrategy::ExhaustivePartitions) {
    if (n > 12) {
      throw IntractablePartitionCount(
          "semivariation: exhaustive strategy is limited to 12 atoms (" +
          std::to_string(n) + " requested)");
    }
    // Keep the total budget bounded on partition-heavy spaces.
    const std::int64_t bell = kBellNumbers[n];
    int rounds = options.assignments;
    if (bell * rounds > 2000000) {
      rounds = std::max<int>(2, static_cast<int>(2000000 / bell));
    }
    for_each_partition(n, [&](const std::vector<int>& part_of_atom,
                              int parts) {
      try_partition(part_of_atom, parts, rounds);
    });
  } else {
    std::vector<int> singletons(n);
    for (int x = 0; x < n; ++x) singletons[x] = x;
    try_partition(singletons, n, options.assignments);
    try_partition(std::vector<int>(n, 0), 1, options.assignments);
  }
  bounds.lower = lower;
  return bounds;
}

Complex ScalarAtomMeasure::value(const MeasurableSet& set) const {
  Complex sum(0.0, 0.0);
  for (int x = 0; x < static_cast<int>(atom_values.size()); ++x) {
    if (set.contains(x)) sum += atom_values[x];
  }
  return sum;
}

double ScalarAtomMeasure::total_variation() const {
  double sum = 0.0;
  for (const Complex& z : atom_values) sum += std::abs(z);
  return sum;
}

ScalarAtomMeasure pairing(const TracePairing& functional,
                          const NonNegativeMeasure& measure,
                          const AlgebraElement& a) {
  if (functional.weight.algebra() != measure.codomain()) {
    throw DomainMismatch("pairing: weight outside the codomain algebra");
  }
  ScalarAtomMeasure out;
  for (int x = 0; x < measure.space().atom_count(); ++x) {
    const ComplexMatrix product =
        functional.weight.matrix() * measure.apply_atom(x, a).matrix();
    out.atom_values.push_back(product.trace());
  }
  return out;
}

}  // namespace ovm
