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

#include "qsc/hadamard.hpp"
#include "test_util.hpp"

using namespace qsc;
using namespace qsc::hadamard;

namespace {

// Random equivalence dressing D1 P1 H P2 D2.
ComplexMatrix dress(Rng& rng, const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<std::size_t> p1(n), p2(n);
  for (std::size_t i = 0; i < n; ++i) p1[i] = p2[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p1[i - 1], p1[rng.uniform_index(i)]);
    std::swap(p2[i - 1], p2[rng.uniform_index(i)]);
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex di = std::polar(1.0, rng.uniform(0.0, 6.28));
    for (std::size_t j = 0; j < n; ++j) out(i, j) = di * h(p1[i], j);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex dj = std::polar(1.0, rng.uniform(0.0, 6.28));
    for (std::size_t i = 0; i < n; ++i) out(i, j) = out(i, j) * dj;
  }
  // column permutation
  ComplexMatrix permuted(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) permuted(i, j) = out(i, p2[j]);
  return permuted;
}

}  // namespace

TEST_CASE("is_hadamard basics") {
  CHECK(is_hadamard(fourier(3)));
  ComplexMatrix ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1.0;
  CHECK_FALSE(is_hadamard(ones));
  CHECK(is_hadamard(family_n4(0.7)));
  CHECK_THROWS_AS(is_hadamard(ComplexMatrix(2, 3)), NonSquare);
}

TEST_CASE("fourier matrices") {
  const ComplexMatrix f2 = fourier(2);
  CHECK(f2(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(f2(1, 1) - Complex(-1.0, 0.0)) <= 1e-15);

  const ComplexMatrix f3 = fourier(3);
  CHECK(std::abs(f3(1, 1) - test::omega) <= 1e-15);
  CHECK(std::abs(f3(1, 2) - test::omega * test::omega) <= 1e-15);
  CHECK(std::abs(f3(2, 2) - test::omega) <= 1e-15);
  CHECK(std::abs(test::omega.real() + 0.5) <= 1e-15);  // Re(omega) = -1/2

  CHECK(is_hadamard(fourier(5)));
  for (std::size_t n = 1; n <= 16; ++n) CHECK(is_hadamard(fourier(n), Tolerance(1e-10)));
}

TEST_CASE("family_n4 is Hadamard for every parameter") {
  CHECK(distance(family_n4(0.0), fourier(4)) <= 1e-14);  // a = 0 reproduces F4
  CHECK(is_hadamard(family_n4(std::numbers::pi / 2.0)));

  const ComplexMatrix h = family_n4(1.234);
  ComplexMatrix gram = h * h.adjoint();
  for (std::size_t i = 0; i < 4; ++i) gram(i, i) -= 4.0;
  CHECK(gram.frobenius_norm() <= 1e-12);

  for (int i = 0; i < 25; ++i)
    CHECK(is_hadamard(family_n4(-3.0 + 0.25 * i), Tolerance(1e-10)));
}

TEST_CASE("dephase") {
  const ComplexMatrix f4 = fourier(4);
  const DephaseResult same = dephase(f4);
  CHECK(distance(same.h, f4) <= 1e-14);  // already dephased

  // scaling a row is undone
  ComplexMatrix scaled = fourier(3);
  for (std::size_t k = 0; k < 3; ++k) scaled(1, k) *= test::omega;
  const DephaseResult undo = dephase(scaled);
  CHECK(distance(undo.h, fourier(3)) <= 1e-13);
  CHECK(distance(undo.d_left * undo.h * undo.d_right, scaled) <= 1e-13);

  Rng rng(3);
  const ComplexMatrix scrambled = dress(rng, fourier(4));
  const DephaseResult deph = dephase(scrambled);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(deph.h(i, 0) - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(deph.h(0, i) - Complex(1.0, 0.0)) <= 1e-12);
  }
  CHECK(distance(deph.d_left * deph.h * deph.d_right, scrambled) <= 1e-12);
  // idempotent
  const DephaseResult again = dephase(deph.h);
  CHECK(distance(again.h, deph.h) <= 1e-13);

  CHECK_THROWS_AS(dephase(ComplexMatrix::identity(3)), NotHadamard);
}

TEST_CASE("equivalent: dressings of F3 are recognized") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix dressed = dress(rng, fourier(3));
    const EquivalenceResult r = equivalent(dressed, fourier(3));
    REQUIRE(r.verdict == EquivalenceVerdict::yes);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_residual <= 1e-8);
    const ComplexMatrix rebuilt =
        r.witness->d1 * r.witness->p1 * fourier(3) * r.witness->p2 * r.witness->d2;
    CHECK(distance(rebuilt, dressed) <= 1e-8);
  }
}

TEST_CASE("equivalent: distinct order-4 family members are inequivalent") {
  const EquivalenceResult r = equivalent(family_n4(0.3), family_n4(0.9));
  CHECK(r.verdict == EquivalenceVerdict::no);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("equivalent: family member at a=0 matches F4") {
  const EquivalenceResult r = equivalent(family_n4(0.0), fourier(4));
  CHECK(r.verdict == EquivalenceVerdict::yes);
}

TEST_CASE("equivalent: behaves as an equivalence relation") {
  Rng rng(7);
  for (std::size_t n = 2; n <= 5; ++n) {
    const ComplexMatrix h = fourier(n);
    CHECK(equivalent(h, h).verdict == EquivalenceVerdict::yes);  // reflexive

    const ComplexMatrix d1 = dress(rng, h);
    const ComplexMatrix d2 = dress(rng, d1);
    CHECK(equivalent(h, d1).verdict == EquivalenceVerdict::yes);  // symmetric pair
    CHECK(equivalent(d1, h).verdict == EquivalenceVerdict::yes);
    CHECK(equivalent(h, d2).verdict == EquivalenceVerdict::yes);  // transitive chain
  }
}

TEST_CASE("equivalent: order above the search cap reports UNKNOWN") {
  const EquivalenceResult r = equivalent(fourier(7), fourier(7));
  CHECK(r.verdict == EquivalenceVerdict::unknown);
}

TEST_CASE("equivalent: input validation") {
  CHECK_THROWS_AS(equivalent(fourier(3), fourier(4)), OrderMismatch);
  CHECK_THROWS_AS(equivalent(ComplexMatrix::identity(3), fourier(3)), NotHadamard);
}
