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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/complex_matrix.hpp"
#include "qsc/tolerance.hpp"

namespace qsc::weak_svd {

/// Witness of a simultaneous weak-SVD diagonalization:
/// U * A_k * V^t = diag(diagonals[k]) for every input matrix A_k.
struct WeakSvdResult {
  ComplexMatrix u;
  ComplexMatrix v;
  std::vector<std::vector<Complex>> diagonals;
};

/// Classical simultaneous-SVD test: A_i A_j^dag = A_j A_i^dag and
/// A_i^dag A_j = A_j^dag A_i for all pairs.
bool check_strong(const std::vector<ComplexMatrix>& as, const Tolerance& tol = {});

/// Weak-SVD test: A_j A_k^dag A_l = A_l A_k^dag A_j for all triples.
bool check_weak(const std::vector<ComplexMatrix>& as, const Tolerance& tol = {});

/// First triple (j,k,l) violating the weak criterion, with the
/// scale-normalized violation ||LHS - RHS||_F / max(1, product of norms).
/// Absent when check_weak holds. Used to justify negative verdicts.
struct WeakViolation {
  double violation;
  std::array<std::size_t, 3> triple;
};
std::optional<WeakViolation> first_weak_violation(const std::vector<ComplexMatrix>& as,
                                                  const Tolerance& tol = {});

/// Alternative weak-SVD test: every A_k^dag A_l is normal and
/// A_j A_k^dag A_k A_l^dag = A_k A_l^dag A_j A_k^dag for all triples.
/// Agrees with check_weak; both published criteria are kept as a
/// cross-validation pair.
bool check_weak_alt(const std::vector<ComplexMatrix>& as, const Tolerance& tol = {});

/// Constructs a weak-SVD witness for a family passing check_weak.
///
/// A random complex combination M = sum w_k A_k is decomposed by svd; for a
/// diagonalizable family every rotated member U A_k V^t is then diagonal up
/// to mixing inside degenerate singular-value clusters of M, which is
/// resolved by recursing on the cluster blocks with fresh weights. Up to 8
/// weight draws are attempted before ConstructionFailure. Deterministic
/// given (inputs, seed).
WeakSvdResult diagonalize(const std::vector<ComplexMatrix>& as, const Tolerance& tol = {},
                          std::uint64_t seed = 0);

/// Max over k of the off-diagonal Frobenius mass of U A_k V^t; the
/// acceptance witness for a result.
double residual(const std::vector<ComplexMatrix>& as, const WeakSvdResult& result);

}  // namespace qsc::weak_svd
