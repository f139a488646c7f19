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

#include <vector>

#include "qsc/complex_matrix.hpp"
#include "qsc/tolerance.hpp"

namespace qsc {

struct EighResult {
  std::vector<double> eigenvalues;  ///< ascending
  ComplexMatrix vectors;            ///< unitary; H * Q = Q * diag(eigenvalues)
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Unconditionally convergent and accurate at the matrix sizes this library
/// targets (n up to a few dozen). Throws NotHermitian if the input is not
/// Hermitian within tol, ConvergenceFailure if the sweep cap is exceeded.
EighResult eigh(const ComplexMatrix& h, const Tolerance& tol = {});

struct SvdResult {
  ComplexMatrix u;                     ///< unitary
  ComplexMatrix v;                     ///< unitary; note U * A * V^t = diag(s)
  std::vector<double> singular_values; ///< descending, >= 0
};

/// Singular value decomposition in the convention U * A * V^t = diag(s).
/// Built on eigh: V comes from the eigenbasis of A^dag A, the left vectors
/// are propagated as A x / ||A x|| (which both phase-aligns the diagonal to
/// be real nonnegative and handles degenerate singular clusters exactly);
/// the eigenbasis of A A^dag supplies the kernel completion.
SvdResult svd(const ComplexMatrix& a, const Tolerance& tol = {});

/// Common eigenbasis of a pairwise-commuting Hermitian family: returns
/// unitary Q with Q^dag M Q diagonal for every member. Diagonalizes the
/// first member, then recurses on the remaining members inside each
/// degenerate eigenspace (cluster threshold 1e-6 * max(1, ||M||_2)).
/// Throws NotHermitian / NotCommuting when the preconditions fail.
ComplexMatrix joint_diag_hermitian(const std::vector<ComplexMatrix>& family,
                                   const Tolerance& tol = {});

}  // namespace qsc
