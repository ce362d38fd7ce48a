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

#include <stdexcept>

namespace ovm {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquare : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NumericalFailure : Error {
  using Error::Error;
};
struct PatternViolation : Error {
  using Error::Error;
};
struct DomainMismatch : Error {
  using Error::Error;
};
struct NotCauchy : Error {
  using Error::Error;
};
struct NotMonotone : Error {
  using Error::Error;
};
struct BoundViolated : Error {
  using Error::Error;
};
struct IncompatibleFamily : Error {
  using Error::Error;
};
struct NotARepresentation : Error {
  using Error::Error;
};
struct InvalidMeasure : Error {
  using Error::Error;
};
struct IntractablePartitionCount : Error {
  using Error::Error;
};
struct EmptyBlueprint : Error {
  using Error::Error;
};
struct BadConfig : Error {
  using Error::Error;
};
struct BadInstanceFile : Error {
  using Error::Error;
};

}  // namespace ovm
