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

#include "qsc/states.hpp"

#include <cmath>

namespace qsc {

namespace {

constexpr double kSpectralCutoff = 1e-12;  // eigenvalues at or below are noise

}  // namespace

PureState::PureState(std::size_t dim, std::vector<Complex> amplitudes, const Tolerance& tol)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
  if (dim_ == 0) throw InvariantViolation("PureState: dimension must be positive");
  if (amplitudes_.size() != dim_ * dim_)
    throw DimensionMismatch("PureState: amplitude vector must have length dim^2");
  for (const auto& z : amplitudes_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvariantViolation("PureState: non-finite amplitude");
  if (std::abs(vec_norm(amplitudes_) - 1.0) > tol.threshold(1.0))
    throw InvariantViolation("PureState: amplitudes not normalized");
}

PureState PureState::from_matrix(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw NonSquare("PureState::from_matrix: matrix not square");
  return PureState(a.rows(), a.entries(), tol);
}

ComplexMatrix matrix_rep(const PureState& psi) {
  return ComplexMatrix(psi.dim(), psi.dim(), psi.amplitudes());
}

SchmidtForm schmidt_decompose(const PureState& psi, const Tolerance& tol) {
  const SvdResult dec = svd(matrix_rep(psi), tol);
  const std::size_t n = psi.dim();
  SchmidtForm form;
  form.coefficients.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    form.coefficients[j] = dec.singular_values[j] * dec.singular_values[j];
  form.basis_a = dec.u.adjoint();
  form.basis_b = dec.v.adjoint();  // column m = conjugated row m of V
  return form;
}

PureState schmidt_reconstruct(const SchmidtForm& form, const Tolerance& tol) {
  const std::size_t n = form.coefficients.size();
  std::vector<Complex> amps(n * n, Complex(0.0, 0.0));
  for (std::size_t m = 0; m < n; ++m) {
    const double w = std::sqrt(std::max(form.coefficients[m], 0.0));
    if (w == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        amps[j * n + l] += w * form.basis_a(j, m) * form.basis_b(l, m);
  }
  return PureState(n, std::move(amps), tol);
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<PureState> states, const Tolerance& tol)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size())
    throw DimensionMismatch("Ensemble: probability/state count mismatch");
  double sum = 0.0;
  for (const double p : probs_) {
    if (!(p > 0.0)) throw InvariantViolation("Ensemble: probabilities must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.threshold(static_cast<double>(probs_.size())))
    throw InvariantViolation("Ensemble: probabilities do not sum to 1");
  const std::size_t d = states_.front().dim();
  for (const auto& s : states_)
    if (s.dim() != d) throw DimensionMismatch("Ensemble: states have different dimensions");
}

DensityMatrix::DensityMatrix(std::size_t dim, ComplexMatrix matrix, Unchecked)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw InvariantViolation("DensityMatrix: dimension must be positive");
  if (matrix_.rows() != dim_ * dim_ || matrix_.cols() != dim_ * dim_)
    throw DimensionMismatch("DensityMatrix: matrix must be dim^2 x dim^2");
}

DensityMatrix::DensityMatrix(std::size_t dim, ComplexMatrix matrix, const Tolerance& tol)
    : DensityMatrix(dim, std::move(matrix), Unchecked{}) {
  if (!matrix_.all_finite()) throw InvariantViolation("DensityMatrix: non-finite entry");
  if (!is_hermitian(matrix_, tol)) throw NotHermitian("DensityMatrix: matrix not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > tol.threshold(1.0))
    throw InvariantViolation("DensityMatrix: trace differs from 1");
  const EighResult dec = eigh(matrix_, tol);
  if (dec.eigenvalues.front() < -tol.threshold(1.0))
    throw InvariantViolation("DensityMatrix: matrix not positive semidefinite");
}

DensityMatrix DensityMatrix::unchecked(std::size_t dim, ComplexMatrix matrix) {
  ComplexMatrix sym = matrix + matrix.adjoint();
  sym *= Complex(0.5, 0.0);
  return DensityMatrix(dim, std::move(sym), Unchecked{});
}

DensityMatrix mix(const Ensemble& ens) {
  const std::size_t n = ens.dim();
  const std::size_t n2 = n * n;
  ComplexMatrix rho(n2, n2);
  for (std::size_t k = 0; k < ens.size(); ++k) {
    const auto& a = ens.state(k).amplitudes();
    const double p = ens.prob(k);
    for (std::size_t i = 0; i < n2; ++i) {
      const Complex w = p * a[i];
      for (std::size_t j = 0; j < n2; ++j) rho(i, j) += w * std::conj(a[j]);
    }
  }
  return DensityMatrix::unchecked(n, std::move(rho));
}

Ensemble spectral_ensemble(const DensityMatrix& rho, const Tolerance& tol) {
  const EighResult dec = eigh(rho.matrix(), tol);
  const std::size_t n2 = rho.matrix().rows();
  std::vector<double> probs;
  std::vector<PureState> states;
  for (std::size_t k = n2; k-- > 0;) {  // descending eigenvalues
    const double lam = dec.eigenvalues[k];
    if (lam <= kSpectralCutoff) break;
    probs.push_back(lam);
    states.emplace_back(rho.dim(), dec.vectors.column(k), tol);
  }
  if (probs.empty()) throw InvariantViolation("spectral_ensemble: state has no spectral mass");
  return Ensemble(std::move(probs), std::move(states), tol);
}

Ensemble mixture_transform(const Ensemble& ens, const ComplexMatrix& w, const Tolerance& tol) {
  const std::size_t big_s = w.rows();
  const std::size_t k_count = w.cols();
  if (k_count != ens.size())
    throw DimensionMismatch("mixture_transform: W column count differs from ensemble size");
  const ComplexMatrix gram = w.adjoint() * w;
  if (distance(gram, ComplexMatrix::identity(k_count)) >
      tol.threshold(w.frobenius_norm() * w.frobenius_norm()))
    throw NotIsometry("mixture_transform: columns of W are not isometric");

  const std::size_t n2 = ens.dim() * ens.dim();
  std::vector<double> probs;
  std::vector<PureState> states;
  for (std::size_t s = 0; s < big_s; ++s) {
    std::vector<Complex> phi(n2, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < k_count; ++k) {
      const Complex coef = w(s, k) * std::sqrt(ens.prob(k));
      if (coef == Complex(0.0, 0.0)) continue;
      const auto& a = ens.state(k).amplitudes();
      for (std::size_t i = 0; i < n2; ++i) phi[i] += coef * a[i];
    }
    const double norm = vec_norm(phi);
    const double q = norm * norm;
    if (q <= tol.eps) continue;
    for (auto& z : phi) z /= norm;
    probs.push_back(q);
    states.emplace_back(ens.dim(), std::move(phi), tol);
  }
  return Ensemble(std::move(probs), std::move(states), tol);
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m, std::size_t dim) {
  const std::size_t n2 = dim * dim;
  if (m.rows() != n2 || m.cols() != n2)
    throw DimensionMismatch("partial_transpose_b: matrix must be dim^2 x dim^2");
  ComplexMatrix out(n2, n2);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          out(i * dim + j, k * dim + l) = m(i * dim + l, k * dim + j);
  return out;
}

ComplexMatrix partial_transpose_b(const DensityMatrix& rho) {
  return partial_transpose_b(rho.matrix(), rho.dim());
}

PptVerdict is_ppt(const DensityMatrix& rho, const Tolerance& tol) {
  const EighResult dec = eigh(partial_transpose_b(rho), tol);
  const double min_eig = dec.eigenvalues.front();
  return PptVerdict{min_eig >= -tol.threshold(1.0), min_eig};
}

ComplexMatrix reduced_density_a(const PureState& psi) {
  const ComplexMatrix a = matrix_rep(psi);
  return a * a.adjoint();
}

ComplexMatrix reduced_density_b(const PureState& psi) {
  const ComplexMatrix a = matrix_rep(psi);
  return (a.adjoint() * a).transpose();
}

PureState canonical_phase(const PureState& psi) {
  const auto& amps = psi.amplitudes();
  std::size_t best = 0;
  double best_mag = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double mag = std::abs(amps[i]);
    if (mag > best_mag + 1e-15) {
      best_mag = mag;
      best = i;
    }
  }
  const Complex phase = amps[best] / best_mag;
  std::vector<Complex> rotated(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) rotated[i] = amps[i] * std::conj(phase);
  return PureState(psi.dim(), std::move(rotated));
}

}  // namespace qsc
