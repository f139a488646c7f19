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

#include "qsc/hadamard.hpp"
#include "qsc/states.hpp"

namespace qsc::bell {

/// Generalized Bell basis: n^2 maximally entangled states built from one
/// Hadamard matrix per cyclic shift,
///   |psi_l^s> = (1/sqrt(n)) sum_j H^s(j,l) |j, (j+s) mod n>
/// (all indices 0-based here; file formats use the 1-based labels). States
/// are stored shift-major: index s*n + l.
struct BellBasis {
  std::size_t n = 0;
  std::vector<ComplexMatrix> hadamards;
  std::vector<PureState> states;

  const PureState& state(std::size_t shift, std::size_t row) const {
    return states[shift * n + row];
  }
};

/// Builds the basis from exactly n verified Hadamard matrices of order n.
/// Throws WrongCount / OrderMismatch / NotHadamard.
BellBasis make_basis(std::vector<ComplexMatrix> hadamards, const Tolerance& tol = {});

/// The basis with every slot the Fourier matrix: the Weyl operator basis.
BellBasis weyl_basis(std::size_t n);

/// True iff both reduced densities equal I/n within tol (equivalently, all
/// Schmidt coefficients are 1/n).
bool verify_max_entangled(const PureState& psi, const Tolerance& tol = {});

/// Frobenius distance between the basis Gram matrix and the identity.
double gram_residual(const BellBasis& basis);

/// Worst reduced-density deviation from I/n over all basis states.
double max_entanglement_residual(const BellBasis& basis);

/// Coefficients <psi_l^k| rho |psi_m^j> as an n^2 x n^2 Hermitian array in
/// the shift-major state ordering.
struct BellDecomposition {
  std::size_t n = 0;
  ComplexMatrix coefficients;
};

BellDecomposition decompose(const DensityMatrix& rho, const BellBasis& basis);
DensityMatrix reconstruct(const BellDecomposition& dec, const BellBasis& basis);

/// Mixture of the n states of one shift with the given probabilities
/// (nonnegative, summing to 1; zero entries are dropped). Such mixtures
/// share a diagonalizing product basis and are always Schmidt-correlated.
DensityMatrix fixed_shift_mixture(const BellBasis& basis, std::size_t shift,
                                  const std::vector<double>& probs,
                                  const Tolerance& tol = {});

}  // namespace qsc::bell
