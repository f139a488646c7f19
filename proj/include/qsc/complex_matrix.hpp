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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/tolerance.hpp"

namespace qsc {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The single carrier type for state matrix
/// representations, unitaries, Hadamard candidates and coefficient matrices.
/// Entries are required to be finite; constructors taking data enforce this.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const;
  double max_abs() const;

  std::vector<Complex> diag() const;
  std::vector<Complex> column(std::size_t j) const;
  std::vector<Complex> row(std::size_t i) const;
  void set_column(std::size_t j, const std::vector<Complex>& v);

  ComplexMatrix submatrix(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius distance ||a - b||_F.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers used across the library.
double vec_norm(const std::vector<Complex>& v);
/// Inner product, conjugate-linear in the first argument.
Complex vec_dot(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Structure predicates. All throw NonSquare on non-square input and decide
// within the given tolerance policy.
bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});
bool is_unitary(const ComplexMatrix& m, const Tolerance& tol = {});
bool is_diagonal(const ComplexMatrix& m, const Tolerance& tol = {});
/// Tests ||M M^dag - M^dag M||_F.
bool is_normal(const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace qsc
