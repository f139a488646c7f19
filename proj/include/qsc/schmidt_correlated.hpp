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

#include <cstdint>
#include <optional>
#include <utility>

#include "qsc/states.hpp"
#include "qsc/weak_svd.hpp"

namespace qsc {

/// A Schmidt-correlated state in witness form: with |e_j> the columns of
/// u^dag and |f_j> the conjugated rows of v (the weak-SVD basis convention),
/// rho = sum_{jl} c(j,l) |e_j f_j><e_l f_l|. c is Hermitian PSD with trace 1.
struct SchmidtCorrelatedForm {
  std::size_t dim = 0;
  ComplexMatrix u;
  ComplexMatrix v;
  ComplexMatrix c;
};

/// Assembles the density matrix of a form (in the computational basis).
DensityMatrix to_density_matrix(const SchmidtCorrelatedForm& form);

/// Decides whether rho is Schmidt-correlated and, if so, returns the witness.
///
/// The spectral ensemble is mapped to matrix representations and run through
/// the weak-SVD criterion; on success the simultaneous diagonalization gives
/// (u, v) and the coefficient matrix c(j,l) = sum_k p_k a_{j,k} conj(a_{l,k}).
/// Checking the spectral ensemble alone suffices: diagonalizability of one
/// ensemble is equivalent to that of every ensemble of the same state.
std::optional<SchmidtCorrelatedForm> detect_schmidt_correlated(const DensityMatrix& rho,
                                                               const Tolerance& tol = {},
                                                               std::uint64_t seed = 0);

/// Empirical companion of the detector: draws `trials` random ensembles of
/// rho via mixture_transform with random isometries (of K, K+1, K+2 rows
/// cyclically) and reports whether every one passes check_weak. Intended for
/// states already detected as Schmidt-correlated.
bool all_ensembles_weak_diagonalizable(const DensityMatrix& rho, std::size_t trials,
                                       std::uint64_t seed, const Tolerance& tol = {});

struct ScSeparability {
  bool separable;
  double max_off_diagonal;
  /// 0-based index pair of the maximal off-diagonal coefficient; the NPPT
  /// witness (the corresponding 2x2 minor of rho^{T_B} is -|c(j,l)|^2).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Separability of a Schmidt-correlated form: separable iff every
/// off-diagonal coefficient vanishes.
ScSeparability is_separable_sc(const SchmidtCorrelatedForm& form, const Tolerance& tol = {});

/// The named 2x2 principal minor of rho^{T_B} in the witness product basis,
/// taken at rows/columns (j,l) and (l,j). Negative when c(j,l) != 0.
double ppt_minor(const DensityMatrix& rho, const SchmidtCorrelatedForm& form, std::size_t j,
                 std::size_t l);

/// Orthogonality criterion over an ensemble that is diagonal in the (u, v)
/// basis: sum_k p_k a_{j,k} conj(a_{l,k}) = 0 for all j != l. Throws
/// NotDiagonalInBasis when a rotated representation is not diagonal.
bool orthogonality_check(const Ensemble& ens, const ComplexMatrix& u, const ComplexMatrix& v,
                         const Tolerance& tol = {});

/// Polar data of a diagonal ensemble: a_{j,k} = moduli[j] * phases(j,k).
struct PhaseDecomposition {
  std::vector<double> moduli;  ///< a_j >= 0, sum of squares 1
  ComplexMatrix phases;        ///< unimodular entries
  std::vector<double> probs;
};

struct PhaseSeparability {
  bool applicable = false;
  std::optional<bool> separable;                   ///< set iff applicable
  std::optional<PhaseDecomposition> decomposition; ///< set iff applicable
};

/// Phase-matrix separability test for ensembles of diagonal states with
/// K = n members, uniform probabilities 1/n and row-constant nonzero moduli
/// |a_{j,k}| = a_j: such a mixture is separable iff the phase matrix is a
/// complex Hadamard matrix. States whose representations are not diagonal,
/// or which miss the structural conditions, are reported not applicable.
PhaseSeparability phase_separability(const Ensemble& ens, const Tolerance& tol = {});

struct RandomSchmidtCorrelated {
  DensityMatrix rho;
  SchmidtCorrelatedForm ground_truth;
};

/// Seeded generator: random PSD trace-1 coefficient matrix of the given rank
/// conjugated into random local bases. Returns the state and the
/// construction as ground truth.
RandomSchmidtCorrelated random_schmidt_correlated(std::size_t n, std::size_t rank,
                                                  std::uint64_t seed);

}  // namespace qsc
