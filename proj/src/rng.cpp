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

#include "qsc/rng.hpp"

#include <cmath>
#include <numbers>

namespace qsc {

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw InvariantViolation("uniform_index: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // in (0, 1], keeps log() finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Complex Rng::normal_complex() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::sqrt(0.5);
}

std::vector<Complex> random_complex_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.normal_complex();
  return v;
}

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal_complex();
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = random_complex_matrix(rng, n, n);
  ComplexMatrix h = g + g.adjoint();
  h *= Complex(0.5, 0.0);
  return h;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix g = random_complex_matrix(rng, n, n);
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> v = g.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const std::vector<Complex> qk = q.column(k);
        const Complex proj = vec_dot(qk, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * qk[i];
      }
    }
    const double nv = vec_norm(v);
    if (nv < 1e-12) {
      // Gaussian columns are independent with probability 1; a degenerate
      // draw is replaced and the column redone.
      for (auto& z : v) z = rng.normal_complex();
      g.set_column(j, v);
      --j;
      continue;
    }
    for (auto& z : v) z /= nv;
    q.set_column(j, v);
  }
  return q;
}

}  // namespace qsc
