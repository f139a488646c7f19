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
#include <vector>

#include "qsc/complex_matrix.hpp"
#include "qsc/eig.hpp"

namespace qsc {

/// Pure state of an n x n bipartite system. Amplitudes are stored row-major:
/// the basis ket |j,l> (both subsystem labels 0-based in code, 1-based in the
/// file formats) sits at position j*n + l.
class PureState {
 public:
  PureState(std::size_t dim, std::vector<Complex> amplitudes, const Tolerance& tol = {});

  /// Inverse of matrix_rep: state whose amplitude matrix is `a`.
  static PureState from_matrix(const ComplexMatrix& a, const Tolerance& tol = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t j, std::size_t l) const { return amplitudes_[j * dim_ + l]; }

 private:
  std::size_t dim_;
  std::vector<Complex> amplitudes_;
};

/// The n x n matrix A with A(j,l) = amplitude of |j,l>. Frobenius norm 1.
ComplexMatrix matrix_rep(const PureState& psi);

struct SchmidtForm {
  std::vector<double> coefficients;  ///< descending, sum 1
  ComplexMatrix basis_a;             ///< columns are the |e_j>
  ComplexMatrix basis_b;             ///< columns are the |f_j>
};

/// Schmidt decomposition via svd of the matrix representation: the
/// coefficients are the squared singular values; with U A V^t = diag(s),
/// |e_m> is column m of U^dag and |f_m> is the conjugated row m of V.
SchmidtForm schmidt_decompose(const PureState& psi, const Tolerance& tol = {});

/// Rebuilds sum_m sqrt(coeff_m) |e_m> (x) |f_m> as a PureState.
PureState schmidt_reconstruct(const SchmidtForm& form, const Tolerance& tol = {});

class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<PureState> states, const Tolerance& tol = {});

  std::size_t size() const { return probs_.size(); }
  std::size_t dim() const { return states_.front().dim(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<PureState>& states() const { return states_; }
  double prob(std::size_t k) const { return probs_[k]; }
  const PureState& state(std::size_t k) const { return states_[k]; }

 private:
  std::vector<double> probs_;
  std::vector<PureState> states_;
};

/// Mixed state: Hermitian, unit-trace, positive semidefinite n^2 x n^2
/// matrix over the |j,l> basis (same index convention as PureState).
class DensityMatrix {
 public:
  /// Validating constructor (Hermiticity, trace, PSD via eigh).
  DensityMatrix(std::size_t dim, ComplexMatrix matrix, const Tolerance& tol = {});

  /// Shape check and symmetrization only; for matrices that are Hermitian
  /// PSD by construction.
  static DensityMatrix unchecked(std::size_t dim, ComplexMatrix matrix);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  struct Unchecked {};
  DensityMatrix(std::size_t dim, ComplexMatrix matrix, Unchecked);

  std::size_t dim_;
  ComplexMatrix matrix_;
};

/// rho = sum_k p_k |psi_k><psi_k|.
DensityMatrix mix(const Ensemble& ens);

/// Eigen-ensemble of rho: probabilities are the eigenvalues above 1e-12
/// (descending), states the corresponding eigenvectors.
Ensemble spectral_ensemble(const DensityMatrix& rho, const Tolerance& tol = {});

/// Ensemble steering: given an S x K matrix with isometric columns
/// (W^dag W = I), produces the ensemble {q_s, |phi_s>} with
/// sqrt(q_s)|phi_s> = sum_k W_{sk} sqrt(p_k) |psi_k>. Rows with q_s below
/// tolerance are dropped. The mixed state is preserved exactly.
Ensemble mixture_transform(const Ensemble& ens, const ComplexMatrix& w, const Tolerance& tol = {});

/// Partial transpose on the second subsystem: entry ((i,j),(k,l)) of the
/// output equals entry ((i,l),(k,j)) of the input. An involution; the result
/// is Hermitian but in general not positive.
ComplexMatrix partial_transpose_b(const DensityMatrix& rho);
ComplexMatrix partial_transpose_b(const ComplexMatrix& m, std::size_t dim);

struct PptVerdict {
  bool ppt;
  double min_eigenvalue;  ///< of rho^{T_B}, the witness for the verdict
};

PptVerdict is_ppt(const DensityMatrix& rho, const Tolerance& tol = {});

/// Tr_B |psi><psi| and Tr_A |psi><psi| (n x n, Hermitian PSD trace 1).
ComplexMatrix reduced_density_a(const PureState& psi);
ComplexMatrix reduced_density_b(const PureState& psi);

/// Global-phase canonical form: rotated so the largest-magnitude amplitude
/// (first such index on ties) is real positive.
PureState canonical_phase(const PureState& psi);

}  // namespace qsc
