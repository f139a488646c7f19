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

#include "qsc/complex_matrix.hpp"

#include <cmath>

namespace qsc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionMismatch("ComplexMatrix: entry count does not match rows*cols");
  if (!all_finite())
    throw InvariantViolation("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = std::conj(entries_[i]);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw NonSquare("trace: matrix not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

std::vector<Complex> ComplexMatrix::diag() const {
  const std::size_t n = std::min(rows_, cols_);
  std::vector<Complex> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const {
  std::vector<Complex> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Complex> ComplexMatrix::row(std::size_t i) const {
  std::vector<Complex> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, const std::vector<Complex>& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix ComplexMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                       const std::vector<std::size_t>& col_idx) const {
  ComplexMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matvec: dimension mismatch");
  std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

double vec_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex vec_dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_dot: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (!m.is_square()) throw NonSquare(std::string(who) + ": matrix not square");
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
  require_square(m, "is_hermitian");
  return distance(m, m.adjoint()) <= tol.threshold(m.frobenius_norm());
}

bool is_unitary(const ComplexMatrix& m, const Tolerance& tol) {
  require_square(m, "is_unitary");
  const ComplexMatrix g = m.adjoint() * m;
  const double nf = m.frobenius_norm();
  return distance(g, ComplexMatrix::identity(m.rows())) <= tol.threshold(nf * nf);
}

bool is_diagonal(const ComplexMatrix& m, const Tolerance& tol) {
  require_square(m, "is_diagonal");
  return m.off_diagonal_norm() <= tol.threshold(m.frobenius_norm());
}

bool is_normal(const ComplexMatrix& m, const Tolerance& tol) {
  require_square(m, "is_normal");
  const double nf = m.frobenius_norm();
  return distance(m * m.adjoint(), m.adjoint() * m) <= tol.threshold(nf * nf);
}

}  // namespace qsc
