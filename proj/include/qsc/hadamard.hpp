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

#include <optional>

#include "qsc/complex_matrix.hpp"
#include "qsc/tolerance.hpp"

namespace qsc::hadamard {

/// True iff every entry is unimodular within tol and H H^dag = n I within
/// tol scaled by n.
bool is_hadamard(const ComplexMatrix& h, const Tolerance& tol = {});

/// Fourier matrix F_n with entries e^{2 pi i (j-1)(k-1) / n}.
ComplexMatrix fourier(std::size_t n);

/// The one-parameter order-4 family with rows
/// (1,1,1,1), (1, i e^{ia}, -1, -i e^{ia}), (1,-1,1,-1),
/// (1, -i e^{ia}, -1, i e^{ia}); Hadamard for every real a.
ComplexMatrix family_n4(double a);

/// Dephased form: first row and first column all ones. The witness satisfies
/// input = d_left * h * d_right with diagonal unitary factors.
struct DephaseResult {
  ComplexMatrix h;
  ComplexMatrix d_left;
  ComplexMatrix d_right;
};

/// Throws NotHadamard if the input fails is_hadamard.
DephaseResult dephase(const ComplexMatrix& h, const Tolerance& tol = {});

/// Witness for h1 = d1 * p1 * h2 * p2 * d2 with diagonal unitaries d1, d2
/// and permutation matrices p1, p2.
struct EquivalenceWitness {
  ComplexMatrix d1;
  ComplexMatrix p1;
  ComplexMatrix p2;
  ComplexMatrix d2;
};

enum class EquivalenceVerdict { yes, no, unknown };

struct EquivalenceResult {
  EquivalenceVerdict verdict;
  std::optional<EquivalenceWitness> witness;  ///< present iff verdict == yes
  double witness_residual = 0.0;
};

/// Equivalence test by exhaustive search over permutation pairs of the
/// dephased forms (with row-multiset pruning). YES always carries a verified
/// witness; NO is only returned when the order-<=6 search is exhaustive;
/// orders above 6 report UNKNOWN.
EquivalenceResult equivalent(const ComplexMatrix& h1, const ComplexMatrix& h2,
                             const Tolerance& tol = {});

}  // namespace qsc::hadamard
