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
#include <random>

#include "qsc/complex_matrix.hpp"

namespace qsc {

/// Deterministic random source. The generator is std::mt19937_64 (whose
/// output stream is fixed by the C++ standard) and all mappings to doubles
/// are coded explicitly, so identical seeds give identical streams on every
/// platform. Standard-library distributions are deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in {0, ..., n-1} by rejection (bias-free).
  std::size_t uniform_index(std::size_t n);

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal();

  /// Complex standard normal: (normal + i*normal) / sqrt(2).
  Complex normal_complex();

 private:
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

std::vector<Complex> random_complex_vector(Rng& rng, std::size_t n);
ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_hermitian(Rng& rng, std::size_t n);
/// Haar-distributed unitary: two-pass modified Gram-Schmidt QR of a complex
/// Gaussian matrix, R chosen with positive diagonal.
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

}  // namespace qsc
