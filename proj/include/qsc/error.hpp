// Copyright 2026 The qsc developers
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
#include <string>

namespace qsc {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller handed us malformed or out-of-contract data (bad shapes,
/// violated invariants, unparseable files). The CLI maps these to exit 2.
struct ValidationError : Error {
  using Error::Error;
};

/// An iterative kernel ran out of budget. The CLI maps these to exit 3.
struct NumericFailure : Error {
  using Error::Error;
};

struct NonSquare : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};

struct NotCommuting : ValidationError {
  using ValidationError::ValidationError;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NotIsometry : ValidationError {
  using ValidationError::ValidationError;
};

struct NotSimultaneouslyDiagonalizable : ValidationError {
  using ValidationError::ValidationError;
};

struct NotDiagonalInBasis : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHadamard : ValidationError {
  using ValidationError::ValidationError;
};

struct OrderMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct WrongCount : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct InvariantViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct ConvergenceFailure : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct ConstructionFailure : NumericFailure {
  using NumericFailure::NumericFailure;
};

}  // namespace qsc
