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

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ovm {

/// Serial reference loop: the ground truth the parallel path is tested
/// against. Results are ordered by index.
template <typename Result, typename Fn>
std::vector<Result> run_indexed_serial(int count, Fn&& fn) {
  std::vector<Result> out(count);
  for (int i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

/// OpenMP batch loop over independent seeded trials. Every trial derives its
/// own seed from the index, so the output is identical to the serial path
/// regardless of scheduling; ordering is by index, not completion.
template <typename Result, typename Fn>
std::vector<Result> run_indexed_parallel(int count, int workers, Fn&& fn) {
#ifdef _OPENMP
  std::vector<Result> out(count);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
  for (int i = 0; i < count; ++i) out[i] = fn(i);
  return out;
#else
  (void)workers;
  return run_indexed_serial<Result>(count, std::forward<Fn>(fn));
#endif
}

template <typename Result, typename Fn>
std::vector<Result> run_indexed(int count, int workers, Fn&& fn) {
  if (workers > 1) {
    return run_indexed_parallel<Result>(count, workers, std::forward<Fn>(fn));
  }
  return run_indexed_serial<Result>(count, std::forward<Fn>(fn));
}

}  // namespace ovm
