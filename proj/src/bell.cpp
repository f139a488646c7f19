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

#include "qsc/bell.hpp"

#include <cmath>

namespace qsc::bell {

BellBasis make_basis(std::vector<ComplexMatrix> hadamards, const Tolerance& tol) {
  if (hadamards.empty()) throw WrongCount("make_basis: need at least one Hadamard matrix");
  const std::size_t n = hadamards.front().rows();
  if (hadamards.size() != n)
    throw WrongCount("make_basis: need exactly one Hadamard matrix per shift");
  for (const auto& h : hadamards) {
    if (!h.is_square() || h.rows() != n) throw OrderMismatch("make_basis: orders differ");
    if (!hadamard::is_hadamard(h, tol)) throw NotHadamard("make_basis: matrix fails the Hadamard test");
  }

  BellBasis basis;
  basis.n = n;
  basis.hadamards = std::move(hadamards);
  basis.states.reserve(n * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<Complex> amps(n * n, Complex(0.0, 0.0));
      for (std::size_t j = 0; j < n; ++j)
        amps[j * n + (j + s) % n] = scale * basis.hadamards[s](j, l);
      basis.states.emplace_back(n, std::move(amps), tol);
    }
  return basis;
}

BellBasis weyl_basis(std::size_t n) {
  return make_basis(std::vector<ComplexMatrix>(n, hadamard::fourier(n)));
}

bool verify_max_entangled(const PureState& psi, const Tolerance& tol) {
  const std::size_t n = psi.dim();
  ComplexMatrix target = ComplexMatrix::identity(n);
  target *= Complex(1.0 / static_cast<double>(n), 0.0);
  return distance(reduced_density_a(psi), target) <= tol.threshold(1.0) &&
         distance(reduced_density_b(psi), target) <= tol.threshold(1.0);
}

double gram_residual(const BellBasis& basis) {
  const std::size_t count = basis.states.size();
  double sum = 0.0;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const Complex g = vec_dot(basis.states[a].amplitudes(), basis.states[b].amplitudes());
      sum += std::norm(g - (a == b ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  return std::sqrt(sum);
}

double max_entanglement_residual(const BellBasis& basis) {
  ComplexMatrix target = ComplexMatrix::identity(basis.n);
  target *= Complex(1.0 / static_cast<double>(basis.n), 0.0);
  double worst = 0.0;
  for (const auto& psi : basis.states) {
    worst = std::max(worst, distance(reduced_density_a(psi), target));
    worst = std::max(worst, distance(reduced_density_b(psi), target));
  }
  return worst;
}

BellDecomposition decompose(const DensityMatrix& rho, const BellBasis& basis) {
  if (rho.dim() != basis.n) throw DimensionMismatch("decompose: dimensions differ");
  const std::size_t count = basis.states.size();
  BellDecomposition dec;
  dec.n = basis.n;
  dec.coefficients = ComplexMatrix(count, count);
  std::vector<std::vector<Complex>> pushed(count);
  for (std::size_t b = 0; b < count; ++b)
    pushed[b] = rho.matrix() * basis.states[b].amplitudes();
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      dec.coefficients(a, b) = vec_dot(basis.states[a].amplitudes(), pushed[b]);
  return dec;
}

DensityMatrix reconstruct(const BellDecomposition& dec, const BellBasis& basis) {
  if (dec.n != basis.n) throw DimensionMismatch("reconstruct: dimensions differ");
  const std::size_t count = basis.states.size();
  const std::size_t n2 = basis.n * basis.n;
  ComplexMatrix rho(n2, n2);
  for (std::size_t a = 0; a < count; ++a) {
    const auto& va = basis.states[a].amplitudes();
    for (std::size_t b = 0; b < count; ++b) {
      const Complex coef = dec.coefficients(a, b);
      if (coef == Complex(0.0, 0.0)) continue;
      const auto& vb = basis.states[b].amplitudes();
      for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) rho(i, j) += coef * va[i] * std::conj(vb[j]);
    }
  }
  return DensityMatrix::unchecked(basis.n, std::move(rho));
}

DensityMatrix fixed_shift_mixture(const BellBasis& basis, std::size_t shift,
                                  const std::vector<double>& probs, const Tolerance& tol) {
  if (shift >= basis.n) throw DimensionMismatch("fixed_shift_mixture: shift out of range");
  if (probs.size() != basis.n)
    throw DimensionMismatch("fixed_shift_mixture: need one probability per basis row");
  std::vector<double> kept_probs;
  std::vector<PureState> kept_states;
  for (std::size_t l = 0; l < basis.n; ++l) {
    if (probs[l] < 0.0)
      throw InvariantViolation("fixed_shift_mixture: probabilities must be nonnegative");
    if (probs[l] == 0.0) continue;
    kept_probs.push_back(probs[l]);
    kept_states.push_back(basis.state(shift, l));
  }
  return mix(Ensemble(std::move(kept_probs), std::move(kept_states), tol));
}

}  // namespace qsc::bell
