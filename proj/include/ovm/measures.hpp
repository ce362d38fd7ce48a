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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ovm/block_algebra.hpp"

namespace ovm {

/// Finite measurable space: atoms 0..atom_count-1 with the full power set as
/// sigma-algebra. Regularity of measures on such a space is automatic, so no
/// validator ever computes it.
class FiniteMeasurableSpace {
 public:
  explicit FiniteMeasurableSpace(int atom_count);

  int atom_count() const { return atom_count_; }

  friend bool operator==(const FiniteMeasurableSpace& a,
                         const FiniteMeasurableSpace& b) {
    return a.atom_count_ == b.atom_count_;
  }
  friend bool operator!=(const FiniteMeasurableSpace& a,
                         const FiniteMeasurableSpace& b) {
    return !(a == b);
  }

 private:
  int atom_count_;
};

/// Subset of atoms, stored as a bit mask.
class MeasurableSet {
 public:
  static MeasurableSet empty(const FiniteMeasurableSpace& space);
  static MeasurableSet full(const FiniteMeasurableSpace& space);
  static MeasurableSet singleton(const FiniteMeasurableSpace& space, int atom);
  static MeasurableSet of(const FiniteMeasurableSpace& space,
                          const std::vector<int>& atoms);

  int atom_count() const { return atom_count_; }
  bool contains(int atom) const { return (bits_ >> atom) & 1ULL; }
  int size() const;

  MeasurableSet unite(const MeasurableSet& other) const;
  MeasurableSet intersect(const MeasurableSet& other) const;
  MeasurableSet complement() const;
  bool disjoint(const MeasurableSet& other) const {
    return (bits_ & other.bits_) == 0;
  }

  friend bool operator==(const MeasurableSet& a, const MeasurableSet& b) {
    return a.atom_count_ == b.atom_count_ && a.bits_ == b.bits_;
  }

 private:
  MeasurableSet(int atom_count, std::uint64_t bits)
      : atom_count_(atom_count), bits_(bits) {}

  int atom_count_ = 0;
  std::uint64_t bits_ = 0;
};

/// Positive operator-valued measure on a finite space, stored by its atom
/// values; the value on any set is the sum over the set's atoms, which makes
/// finite (= countable) additivity structural.
class PovMeasure {
 public:
  PovMeasure(FiniteMeasurableSpace space, MatrixAlgebra codomain,
             std::vector<AlgebraElement> atom_values);

  const FiniteMeasurableSpace& space() const { return space_; }
  const MatrixAlgebra& codomain() const { return codomain_; }
  const AlgebraElement& atom_value(int atom) const {
    return atom_values_[atom];
  }
  AlgebraElement value(const MeasurableSet& set) const;

 private:
  FiniteMeasurableSpace space_;
  MatrixAlgebra codomain_;
  std::vector<AlgebraElement> atom_values_;
};

/// A POV measure whose atom values are Hermitian projections with mutually
/// orthogonal ranges; equivalently, one that is multiplicative over set
/// intersections.
struct SpectralMeasure : PovMeasure {
  using PovMeasure::PovMeasure;
  explicit SpectralMeasure(PovMeasure base) : PovMeasure(std::move(base)) {}
};

/// Measure with values in the linear maps W1 -> W2, stored per atom by the
/// map's action on the canonical matrix-unit basis of W1's block pattern.
/// Linear extension over that basis is exact, so additivity and linearity
/// hold by construction; positivity is certified by validate_nonneg.
class NonNegativeMeasure {
 public:
  NonNegativeMeasure(FiniteMeasurableSpace space, MatrixAlgebra domain,
                     MatrixAlgebra codomain,
                     std::vector<std::vector<AlgebraElement>> atom_maps);

  const FiniteMeasurableSpace& space() const { return space_; }
  const MatrixAlgebra& domain() const { return domain_; }
  const MatrixAlgebra& codomain() const { return codomain_; }

  /// Stored value of the atom map at the unit-th basis matrix unit.
  const AlgebraElement& basis_value(int atom, int unit) const {
    return atom_maps_[atom][unit];
  }

  /// m^x(a) by linear extension over the stored basis values.
  AlgebraElement apply_atom(int atom, const AlgebraElement& a) const;

  /// m(set)(a) = sum of the atom maps over the set.
  AlgebraElement evaluate(const MeasurableSet& set,
                          const AlgebraElement& a) const;

  /// The set function m_a for a fixed operator (no positivity check).
  PovMeasure restriction(const AlgebraElement& a) const;

  /// ||m_id(X)||, the scale entering the semivariation bound.
  double identity_mass_norm() const;

 private:
  FiniteMeasurableSpace space_;
  MatrixAlgebra domain_;
  MatrixAlgebra codomain_;
  std::vector<std::vector<AlgebraElement>> atom_maps_;
};

/// A non-negative measure whose projection restrictions are spectral measures
/// satisfying the product law M_P(D1) M_Q(D2) = M_PQ(D1 n D2).
struct NonNegativeSpectralMeasure : NonNegativeMeasure {
  using NonNegativeMeasure::NonNegativeMeasure;
  explicit NonNegativeSpectralMeasure(NonNegativeMeasure base)
      : NonNegativeMeasure(std::move(base)) {}
};

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

struct PovReport {
  std::vector<double> atom_margins;
  double worst_margin = 0.0;
  int worst_atom = -1;
  bool pass = false;
};

PovReport validate_pov(const PovMeasure& measure, const Tolerance& tol = {});

struct SpectralReport {
  double projection_defect = 0.0;     // worst ||P^2 - P||
  double hermitian_defect = 0.0;      // worst ||P - P*||
  double orthogonality_defect = 0.0;  // worst ||F({x})F({y})||, x != y
  double normalization_defect = 0.0;  // ||F(X) - I|| when requested
  int witness_atom = -1;
  int witness_atom_b = -1;
  bool pass = false;
};

SpectralReport validate_spectral(const SpectralMeasure& measure,
                                 const Tolerance& tol = {},
                                 bool normalized = false);

/// How positivity of the atom maps is decided. A PSD Choi matrix certifies
/// complete positivity and is a sound PASS; the rank-one search minimizes the
/// least eigenvalue of m^x(vv*) over unit vectors per block, giving sound FAIL
/// witnesses and tolerance-qualified passes.
enum class PositivityPolicy {
  ChoiCertificate,
  RankOneSearch,
  ChoiThenRankOne,
};

struct RankOneOptions {
  int starts = 64;
  int steps = 200;
  double step_size = 0.1;
  std::uint64_t seed = 2024;
  int workers = 1;
};

enum class AtomPositivityStatus {
  PassCompletelyPositive,  // sound
  PassSearch,              // tolerance-qualified
  Inconclusive,            // Choi-only policy, certificate absent
  Fail,                    // sound
};

struct PositivityWitness {
  int block = -1;
  ComplexVector vector;  // unit vector with m^x(vv*) not PSD
  double margin = 0.0;
};

struct AtomPositivity {
  int atom = -1;
  AtomPositivityStatus status = AtomPositivityStatus::Fail;
  double hermiticity_defect = 0.0;
  std::optional<double> choi_margin;
  std::optional<double> search_margin;
  std::optional<PositivityWitness> witness;
};

struct PositivityReport {
  std::vector<AtomPositivity> atoms;
  double worst_margin = 0.0;
  bool pass = false;
  bool sound = false;  // true when every atom verdict is sound
};

PositivityReport validate_nonneg(const NonNegativeMeasure& measure,
                                 PositivityPolicy policy,
                                 const Tolerance& tol = {},
                                 const RankOneOptions& options = {});

/// Choi block matrix [m^x(E_ij)]_ij of one domain block's restriction;
/// exposed for tests.
ComplexMatrix choi_matrix(const NonNegativeMeasure& measure, int atom,
                          int domain_block);

struct NonNegSpectralOptions {
  int projection_samples = 8;
  std::uint64_t seed = 1;
  bool include_noncommuting = false;
  PositivityPolicy policy = PositivityPolicy::ChoiThenRankOne;
  RankOneOptions rank_one;
};

struct ProductLawWitness {
  std::uint64_t pair_seed = 0;
  int atom_x = -1;
  int atom_y = -1;
  double defect = 0.0;
};

struct NonNegSpectralReport {
  double spectral_defect = 0.0;  // worst defect over probed restrictions M_P
  double product_defect = 0.0;
  std::optional<ProductLawWitness> product_witness;
  int spectral_witness_atom = -1;
  PositivityReport positivity;
  bool pass = false;
};

NonNegSpectralReport validate_nonneg_spectral(
    const NonNegativeSpectralMeasure& measure,
    const NonNegSpectralOptions& options = {}, const Tolerance& tol = {});

/// ||M(id)(X) - I||.
double normalization_defect(const NonNegativeMeasure& measure);

// ---------------------------------------------------------------------------
// Semivariation and predual pairing
// ---------------------------------------------------------------------------

enum class SemivariationStrategy {
  ExhaustivePartitions,  // all set partitions, sampled operator assignments
  Structured,            // singleton + whole-space partitions only
};

struct SemivariationOptions {
  SemivariationStrategy strategy = SemivariationStrategy::ExhaustivePartitions;
  std::uint64_t seed = 11;
  int assignments = 32;
};

struct SemivariationBounds {
  double lower = 0.0;  // best candidate found for sup ||sum m_Aj(Dj)||
  double upper = 0.0;  // 4 ||m_id(X)||
};

SemivariationBounds semivariation(const NonNegativeMeasure& measure,
                                  const SemivariationOptions& options = {});

/// Normal functional on W2 realized as trace against a fixed weight matrix.
struct TracePairing {
  AlgebraElement weight;
};

/// Complex measure over atoms obtained by pairing a functional with m_A.
struct ScalarAtomMeasure {
  std::vector<Complex> atom_values;

  Complex value(const MeasurableSet& set) const;
  double total_variation() const;
};

ScalarAtomMeasure pairing(const TracePairing& functional,
                          const NonNegativeMeasure& measure,
                          const AlgebraElement& a);

}  // namespace ovm
