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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/bell.hpp"
#include "qsc/hadamard.hpp"
#include "test_util.hpp"

using namespace qsc;

namespace {

const PureState bell_state(2, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});

PureState basis_ket(std::size_t n, std::size_t j, std::size_t l) {
  std::vector<Complex> amps(n * n, Complex(0.0, 0.0));
  amps[j * n + l] = 1.0;
  return PureState(n, std::move(amps));
}

}  // namespace

TEST_CASE("matrix_rep: basis ket, cycled Fourier state, Bell state") {
  const ComplexMatrix m = matrix_rep(basis_ket(2, 0, 0));
  CHECK(m(0, 0) == Complex(1.0, 0.0));
  CHECK(m.frobenius_norm() == doctest::Approx(1.0));

  const auto triple = test::cycled_fourier_triple();
  ComplexMatrix f3 = hadamard::fourier(3);
  f3 *= Complex(1.0 / 3.0, 0.0);
  CHECK(distance(matrix_rep(triple[0]), f3) <= 1e-14);

  ComplexMatrix half_id = ComplexMatrix::identity(2);
  half_id *= Complex(1.0 / std::sqrt(2.0), 0.0);
  CHECK(distance(matrix_rep(bell_state), half_id) <= 1e-15);
}

TEST_CASE("PureState validation") {
  CHECK_THROWS_AS(PureState(2, {1.0, 0.0, 0.0}), DimensionMismatch);
  CHECK_THROWS_AS(PureState(2, {1.0, 1.0, 0.0, 0.0}), InvariantViolation);  // not normalized
}

TEST_CASE("schmidt_decompose: product, cycled Fourier, Bell") {
  const SchmidtForm product = schmidt_decompose(basis_ket(2, 0, 0));
  CHECK(product.coefficients[0] == doctest::Approx(1.0));
  CHECK(product.coefficients[1] == doctest::Approx(0.0));

  const SchmidtForm fourier_form = schmidt_decompose(test::cycled_fourier_triple()[0]);
  for (double lam : fourier_form.coefficients)
    CHECK(lam == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  const SchmidtForm bell_form = schmidt_decompose(bell_state);
  CHECK(bell_form.coefficients[0] == doctest::Approx(0.5));
  CHECK(bell_form.coefficients[1] == doctest::Approx(0.5));
}

TEST_CASE("schmidt_decompose: reconstruction property") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const PureState psi = test::random_pure_state(rng, n);
    const SchmidtForm form = schmidt_decompose(psi);
    double sum = 0.0;
    for (double lam : form.coefficients) {
      CHECK(lam >= -1e-12);
      sum += lam;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    const PureState rebuilt = schmidt_reconstruct(form, Tolerance(1e-6));
    double residual = 0.0;
    for (std::size_t i = 0; i < psi.amplitudes().size(); ++i)
      residual += std::norm(rebuilt.amplitudes()[i] - psi.amplitudes()[i]);
    CHECK(std::sqrt(residual) <= 1e-8);
  }
}

TEST_CASE("mix: projector, maximally mixed, equivalent ensembles") {
  const Ensemble single({1.0}, {bell_state});
  const DensityMatrix proj = mix(single);
  ComplexMatrix expected(4, 4);
  const auto& a = bell_state.amplitudes();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) expected(i, j) = a[i] * std::conj(a[j]);
  CHECK(distance(proj.matrix(), expected) <= 1e-15);

  std::vector<PureState> products;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l) products.push_back(basis_ket(2, j, l));
  const DensityMatrix mixed = mix(Ensemble(std::vector<double>(4, 0.25), products));
  ComplexMatrix quarter_id = ComplexMatrix::identity(4);
  quarter_id *= Complex(0.25, 0.0);
  CHECK(distance(mixed.matrix(), quarter_id) <= 1e-15);

  // the cycled-Fourier ensemble and its diagonal form describe the same
  // state: the diagonal coordinates live in the witness basis, i.e. the
  // mixtures agree after the local rotation U (x) V with U = F3^dag/sqrt(3),
  // V = I
  const auto triple = test::cycled_fourier_triple();
  const DensityMatrix rho1 = mix(Ensemble(std::vector<double>(3, 1.0 / 3.0), triple));
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = test::omega, w2 = test::omega * test::omega;
  std::vector<PureState> diagonal_states{
      PureState(3, {s, 0, 0, 0, s, 0, 0, 0, s}),
      PureState(3, {s, 0, 0, 0, s * w, 0, 0, 0, s * w2}),
      PureState(3, {s, 0, 0, 0, s * w2, 0, 0, 0, s * w})};
  const DensityMatrix rho2 = mix(Ensemble(std::vector<double>(3, 1.0 / 3.0), diagonal_states));
  ComplexMatrix u = hadamard::fourier(3).adjoint();
  u *= Complex(s, 0.0);
  const ComplexMatrix local = kron(u, ComplexMatrix::identity(3));
  CHECK(distance(local * rho1.matrix() * local.adjoint(), rho2.matrix()) <= 1e-14);
}

TEST_CASE("spectral_ensemble: ranks and round trip") {
  const DensityMatrix proj = mix(Ensemble({1.0}, {bell_state}));
  const Ensemble single = spectral_ensemble(proj);
  CHECK(single.size() == 1);
  CHECK(single.prob(0) == doctest::Approx(1.0));

  ComplexMatrix quarter_id = ComplexMatrix::identity(4);
  quarter_id *= Complex(0.25, 0.0);
  const Ensemble uniform = spectral_ensemble(DensityMatrix(2, quarter_id));
  CHECK(uniform.size() == 4);
  for (double p : uniform.probs()) CHECK(p == doctest::Approx(0.25));

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const DensityMatrix rho = test::random_dense_state(rng, n);
    const Ensemble ens = spectral_ensemble(rho);
    CHECK(distance(mix(ens).matrix(), rho.matrix()) <= 1e-8);
    // eigenstates are pairwise orthogonal
    for (std::size_t i = 0; i < ens.size(); ++i)
      for (std::size_t j = i + 1; j < ens.size(); ++j)
        CHECK(test::overlap_magnitude(ens.state(i), ens.state(j)) <= 1e-8);
  }
}

TEST_CASE("mixture_transform: identity, unitary, embedding") {
  Rng rng(41);
  const DensityMatrix rho = test::random_dense_state(rng, 2);
  const Ensemble ens = spectral_ensemble(rho);
  const std::size_t k = ens.size();

  const Ensemble same = mixture_transform(ens, ComplexMatrix::identity(k));
  CHECK(same.size() == k);
  CHECK(distance(mix(same).matrix(), rho.matrix()) <= 1e-12);

  const Ensemble rotated = mixture_transform(ens, random_unitary(rng, k));
  CHECK(distance(mix(rotated).matrix(), rho.matrix()) <= 1e-9);

  const ComplexMatrix big = random_unitary(rng, k + 3);
  ComplexMatrix embed(k + 3, k);
  for (std::size_t i = 0; i < k + 3; ++i)
    for (std::size_t j = 0; j < k; ++j) embed(i, j) = big(i, j);
  const Ensemble larger = mixture_transform(ens, embed);
  CHECK(larger.size() > k);
  CHECK(distance(mix(larger).matrix(), rho.matrix()) <= 1e-9);
}

TEST_CASE("mixture_transform: errors") {
  Rng rng(43);
  const DensityMatrix rho = test::random_dense_state(rng, 2);
  const Ensemble ens = spectral_ensemble(rho);
  ComplexMatrix not_isometry(ens.size(), ens.size());
  CHECK_THROWS_AS(mixture_transform(ens, not_isometry), NotIsometry);
  CHECK_THROWS_AS(mixture_transform(ens, ComplexMatrix::identity(ens.size() + 1)),
                  DimensionMismatch);
}

TEST_CASE("partial_transpose_b: fixed points, witness, involution") {
  std::vector<PureState> products;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l) products.push_back(basis_ket(2, j, l));
  const DensityMatrix diag_state = mix(Ensemble({0.4, 0.3, 0.2, 0.1}, products));
  CHECK(distance(partial_transpose_b(diag_state), diag_state.matrix()) <= 1e-15);

  const DensityMatrix bell_proj = mix(Ensemble({1.0}, {bell_state}));
  const EighResult dec = eigh(partial_transpose_b(bell_proj));
  CHECK(dec.eigenvalues.front() == doctest::Approx(-0.5).epsilon(1e-12));

  Rng rng(51);
  const DensityMatrix rho = test::random_dense_state(rng, 3);
  const ComplexMatrix pt = partial_transpose_b(rho);
  CHECK(distance(partial_transpose_b(pt, 3), rho.matrix()) == 0.0);  // exact involution
  CHECK(std::abs(pt.trace() - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(is_hermitian(pt));
}

TEST_CASE("is_ppt: separable, Bell, Schmidt-correlated instance") {
  std::vector<PureState> products;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l) products.push_back(basis_ket(2, j, l));
  CHECK(is_ppt(mix(Ensemble(std::vector<double>(4, 0.25), products))).ppt);

  const PptVerdict bell_verdict = is_ppt(mix(Ensemble({1.0}, {bell_state})));
  CHECK_FALSE(bell_verdict.ppt);
  CHECK(bell_verdict.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

  const auto triple = test::cycled_fourier_triple();
  const DensityMatrix sc = mix(Ensemble(std::vector<double>(3, 1.0 / 3.0), triple));
  CHECK(is_ppt(sc).ppt);
}

TEST_CASE("reduced densities") {
  const ComplexMatrix ra = reduced_density_a(basis_ket(2, 0, 1));
  CHECK(ra(0, 0) == Complex(1.0, 0.0));
  const ComplexMatrix rb = reduced_density_b(basis_ket(2, 0, 1));
  CHECK(rb(1, 1) == Complex(1.0, 0.0));

  ComplexMatrix half_id = ComplexMatrix::identity(2);
  half_id *= Complex(0.5, 0.0);
  CHECK(distance(reduced_density_a(bell_state), half_id) <= 1e-15);
  CHECK(distance(reduced_density_b(bell_state), half_id) <= 1e-15);

  const bell::BellBasis weyl3 = bell::weyl_basis(3);
  ComplexMatrix third_id = ComplexMatrix::identity(3);
  third_id *= Complex(1.0 / 3.0, 0.0);
  for (const auto& psi : weyl3.states) {
    CHECK(distance(reduced_density_a(psi), third_id) <= 1e-10);
    CHECK(distance(reduced_density_b(psi), third_id) <= 1e-10);
  }
}

TEST_CASE("DensityMatrix validation") {
  ComplexMatrix bad_trace = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(DensityMatrix(2, bad_trace), InvariantViolation);

  ComplexMatrix not_psd(4, 4);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(2, not_psd), InvariantViolation);

  ComplexMatrix not_hermitian(4, 4);
  not_hermitian(0, 0) = 1.0;
  not_hermitian(0, 1) = 0.5;
  CHECK_THROWS_AS(DensityMatrix(2, not_hermitian), NotHermitian);
}

TEST_CASE("canonical_phase grounds the global phase") {
  Rng rng(61);
  const PureState psi = test::random_pure_state(rng, 3);
  const Complex phase = std::polar(1.0, 1.2345);
  std::vector<Complex> rotated = psi.amplitudes();
  for (auto& z : rotated) z *= phase;
  const PureState psi2(3, std::move(rotated));
  const PureState c1 = canonical_phase(psi);
  const PureState c2 = canonical_phase(psi2);
  double diff = 0.0;
  for (std::size_t i = 0; i < c1.amplitudes().size(); ++i)
    diff += std::norm(c1.amplitudes()[i] - c2.amplitudes()[i]);
  CHECK(std::sqrt(diff) <= 1e-12);
}
