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

#include "qsc/schmidt_correlated.hpp"

#include <cmath>

#include "qsc/hadamard.hpp"
#include "qsc/rng.hpp"

namespace qsc {

namespace {

// Witness product vectors g_j = |e_j> (x) |f_j> as columns of an n^2 x n
// matrix, with e_j the columns of u^dag and f_j the conjugated rows of v.
ComplexMatrix witness_columns(const SchmidtCorrelatedForm& form) {
  const std::size_t n = form.dim;
  ComplexMatrix g(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        g(r * n + s, j) = std::conj(form.u(j, r)) * std::conj(form.v(j, s));
  return g;
}

// Probability thresholds of the structural assumptions behind the phase
// criterion; the assumptions are exact, near-misses are inapplicable.
constexpr double kUniformProbTol = 1e-9;
constexpr double kModulusSpreadTol = 1e-7;
constexpr double kZeroModulusTol = 1e-9;

}  // namespace

DensityMatrix to_density_matrix(const SchmidtCorrelatedForm& form) {
  const ComplexMatrix g = witness_columns(form);
  return DensityMatrix::unchecked(form.dim, g * form.c * g.adjoint());
}

std::optional<SchmidtCorrelatedForm> detect_schmidt_correlated(const DensityMatrix& rho,
                                                               const Tolerance& tol,
                                                               std::uint64_t seed) {
  const Ensemble ens = spectral_ensemble(rho, tol);
  std::vector<ComplexMatrix> reps;
  reps.reserve(ens.size());
  for (const auto& psi : ens.states()) reps.push_back(matrix_rep(psi));

  if (!weak_svd::check_weak(reps, tol)) return std::nullopt;
  const weak_svd::WeakSvdResult dec = weak_svd::diagonalize(reps, tol, seed);

  const std::size_t n = rho.dim();
  ComplexMatrix c(n, n);
  for (std::size_t k = 0; k < ens.size(); ++k) {
    const double p = ens.prob(k);
    const auto& alpha = dec.diagonals[k];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c(j, l) += p * alpha[j] * std::conj(alpha[l]);
  }
  return SchmidtCorrelatedForm{n, dec.u, dec.v, std::move(c)};
}

bool all_ensembles_weak_diagonalizable(const DensityMatrix& rho, std::size_t trials,
                                       std::uint64_t seed, const Tolerance& tol) {
  const Ensemble spectral = spectral_ensemble(rho, tol);
  const std::size_t k_count = spectral.size();
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t rows = k_count + t % 3;
    const ComplexMatrix full = random_unitary(rng, rows);
    ComplexMatrix w(rows, k_count);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < k_count; ++k) w(i, k) = full(i, k);
    const Ensemble transformed = mixture_transform(spectral, w, tol);
    std::vector<ComplexMatrix> reps;
    reps.reserve(transformed.size());
    for (const auto& psi : transformed.states()) reps.push_back(matrix_rep(psi));
    if (!weak_svd::check_weak(reps, tol)) return false;
  }
  return true;
}

ScSeparability is_separable_sc(const SchmidtCorrelatedForm& form, const Tolerance& tol) {
  ScSeparability out{true, 0.0, std::nullopt};
  for (std::size_t j = 0; j < form.dim; ++j)
    for (std::size_t l = 0; l < form.dim; ++l) {
      if (j == l) continue;
      const double mag = std::abs(form.c(j, l));
      if (mag > out.max_off_diagonal) {
        out.max_off_diagonal = mag;
        out.witness = std::make_pair(j, l);
      }
    }
  if (out.max_off_diagonal <= tol.threshold(1.0)) {
    out.separable = true;
    out.witness.reset();
  } else {
    out.separable = false;
  }
  return out;
}

double ppt_minor(const DensityMatrix& rho, const SchmidtCorrelatedForm& form, std::size_t j,
                 std::size_t l) {
  if (j >= form.dim || l >= form.dim || j == l)
    throw DimensionMismatch("ppt_minor: indices must be distinct and in range");
  const ComplexMatrix local = kron(form.u, form.v);
  const ComplexMatrix in_witness_basis = local * rho.matrix() * local.adjoint();
  const ComplexMatrix pt = partial_transpose_b(in_witness_basis, form.dim);
  const std::size_t a = j * form.dim + l;
  const std::size_t b = l * form.dim + j;
  const Complex det = pt(a, a) * pt(b, b) - pt(a, b) * pt(b, a);
  return det.real();
}

bool orthogonality_check(const Ensemble& ens, const ComplexMatrix& u, const ComplexMatrix& v,
                         const Tolerance& tol) {
  const std::size_t n = ens.dim();
  if (u.rows() != n || !u.is_square() || v.rows() != n || !v.is_square())
    throw DimensionMismatch("orthogonality_check: basis size does not match ensemble");
  const ComplexMatrix vt = v.transpose();
  ComplexMatrix gram(n, n);
  for (std::size_t k = 0; k < ens.size(); ++k) {
    const ComplexMatrix t = u * matrix_rep(ens.state(k)) * vt;
    if (t.off_diagonal_norm() > tol.threshold(1.0))
      throw NotDiagonalInBasis("orthogonality_check: state not diagonal in the given basis");
    const std::vector<Complex> alpha = t.diag();
    const double p = ens.prob(k);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) gram(j, l) += p * alpha[j] * std::conj(alpha[l]);
  }
  return gram.off_diagonal_norm() <= tol.threshold(1.0);
}

PhaseSeparability phase_separability(const Ensemble& ens, const Tolerance& tol) {
  PhaseSeparability out;
  const std::size_t n = ens.dim();
  if (ens.size() != n) return out;

  for (const double p : ens.probs())
    if (std::abs(p - 1.0 / static_cast<double>(n)) > kUniformProbTol) return out;

  ComplexMatrix alpha(n, n);  // alpha(j, k) for ensemble member k
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix rep = matrix_rep(ens.state(k));
    if (rep.off_diagonal_norm() > tol.threshold(1.0)) return out;
    for (std::size_t j = 0; j < n; ++j) alpha(j, k) = rep(j, j);
  }

  PhaseDecomposition dec;
  dec.moduli.resize(n);
  dec.phases = ComplexMatrix(n, n);
  dec.probs = ens.probs();
  for (std::size_t j = 0; j < n; ++j) {
    double lo = std::abs(alpha(j, 0)), hi = lo, sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double m = std::abs(alpha(j, k));
      lo = std::min(lo, m);
      hi = std::max(hi, m);
      sum += m;
    }
    if (hi - lo > kModulusSpreadTol) return out;
    dec.moduli[j] = sum / static_cast<double>(n);
    if (dec.moduli[j] <= kZeroModulusTol) return out;
    for (std::size_t k = 0; k < n; ++k)
      dec.phases(j, k) = alpha(j, k) / std::abs(alpha(j, k));
  }

  out.applicable = true;
  out.separable = hadamard::is_hadamard(dec.phases, tol);
  out.decomposition = std::move(dec);
  return out;
}

RandomSchmidtCorrelated random_schmidt_correlated(std::size_t n, std::size_t rank,
                                                  std::uint64_t seed) {
  if (n == 0 || rank == 0 || rank > n)
    throw DimensionMismatch("random_schmidt_correlated: need 1 <= rank <= n");
  Rng rng(seed);
  const ComplexMatrix g = random_complex_matrix(rng, n, rank);
  ComplexMatrix c = g * g.adjoint();
  c *= Complex(1.0 / c.trace().real(), 0.0);

  SchmidtCorrelatedForm form{n, random_unitary(rng, n), random_unitary(rng, n), std::move(c)};
  DensityMatrix rho = to_density_matrix(form);
  return RandomSchmidtCorrelated{std::move(rho), std::move(form)};
}

}  // namespace qsc
