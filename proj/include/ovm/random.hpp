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
#include <random>

#include "ovm/kernel.hpp"

namespace ovm {

/// Deterministic seeded generator. Every sampling routine in the library
/// receives one of these (or a raw seed) explicitly; nothing draws from
/// global state, so concurrent trials need no coordination.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_gaussian() { return Complex(gaussian(), gaussian()); }

  /// Uniform integer in [0, bound).
  std::uint64_t integer(std::uint64_t bound);

  bool coin() { return integer(2) == 1; }

  /// Derive an independent child seed.
  std::uint64_t fork();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// splitmix64-style combiner for per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

ComplexMatrix random_gaussian_matrix(Rng& rng, int rows, int cols);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase-fixed R).
ComplexMatrix random_unitary(Rng& rng, int dim);

}  // namespace ovm
