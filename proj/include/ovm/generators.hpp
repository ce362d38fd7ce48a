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

#include "ovm/measures.hpp"

namespace ovm {

/// m^x(A) = A on every atom.
NonNegativeMeasure make_identity_measure(int atoms,
                                         const MatrixAlgebra& algebra);

/// m^x(A) = sum_k V_k A V_k* with seeded Gaussian Kraus terms (one row per
/// codomain block), rescaled to ||m_id(X)|| = 1. Completely positive, so the
/// Choi certificate accepts it.
NonNegativeMeasure make_cp_measure(int atoms, const MatrixAlgebra& domain,
                                   const MatrixAlgebra& codomain,
                                   int kraus_terms, std::uint64_t seed);

/// m^x(A) = V_x A^T V_x*, rescaled like the CP generator. Positive but not
/// completely positive on blocks of size >= 2: the Choi certificate is
/// inconclusive and only the rank-one search accepts it.
NonNegativeMeasure make_transpose_measure(int atoms,
                                          const MatrixAlgebra& domain,
                                          std::uint64_t seed);

/// m^x(A) = V_x A V_x* with one Gaussian conjugation per atom. Linear and CP
/// per atom but generally not spectral.
NonNegativeMeasure make_conjugation_measure(int atoms,
                                            const MatrixAlgebra& domain,
                                            std::uint64_t seed);

/// M^x(A) = U (delta_xy A)_y U*: every atom embeds the domain into its own
/// orthogonal slot of the codomain, conjugated by one Haar unitary. A
/// normalized non-negative spectral measure by construction.
NonNegativeMeasure make_embedding_spectral_measure(int atoms,
                                                   const MatrixAlgebra& domain,
                                                   std::uint64_t seed);

}  // namespace ovm
