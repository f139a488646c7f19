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

#include "qsc/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qsc::hadamard {

namespace {

constexpr std::size_t kExhaustiveOrderCap = 6;
constexpr double kWitnessBound = 1e-8;

// Dephasing for matrices already known to be (a permutation of) a Hadamard.
DephaseResult dephase_unchecked(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  DephaseResult out;
  out.h = h;
  out.d_left = ComplexMatrix(n, n);
  out.d_right = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex pivot = h(j, 0);
    out.d_left(j, j) = pivot;
    for (std::size_t k = 0; k < n; ++k) out.h(j, k) /= pivot;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex pivot = out.h(0, k);
    out.d_right(k, k) = pivot;
    for (std::size_t j = 0; j < n; ++j) out.h(j, k) /= pivot;
  }
  return out;
}

ComplexMatrix diagonal_inverse(const ComplexMatrix& d) {
  ComplexMatrix inv(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) inv(i, i) = 1.0 / d(i, i);
  return inv;
}

// Permutation matrix P with P(i, perm[i]) = 1, so that (P*M) has row i equal
// to row perm[i] of M.
ComplexMatrix row_perm_matrix(const std::vector<std::size_t>& perm) {
  ComplexMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1.0;
  return p;
}

// Permutation matrix P with P(perm[k], k) = 1, so that (M*P) has column k
// equal to column perm[k] of M.
ComplexMatrix col_perm_matrix(const std::vector<std::size_t>& perm) {
  ComplexMatrix p(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) p(perm[k], k) = 1.0;
  return p;
}

// Factor a monomial matrix (one nonzero per row and column) as D * P.
void factor_diag_perm(const ComplexMatrix& m, ComplexMatrix& d, ComplexMatrix& p) {
  const std::size_t n = m.rows();
  d = ComplexMatrix(n, n);
  p = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t jmax = 0;
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        jmax = j;
      }
    d(i, i) = m(i, jmax);
    p(i, jmax) = 1.0;
  }
}

// Factor a monomial matrix as P * D.
void factor_perm_diag(const ComplexMatrix& m, ComplexMatrix& p, ComplexMatrix& d) {
  const std::size_t n = m.rows();
  d = ComplexMatrix(n, n);
  p = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        imax = i;
      }
    d(j, j) = m(imax, j);
    p(imax, j) = 1.0;
  }
}

bool entries_close(const Complex& a, const Complex& b, double delta) {
  return std::abs(a - b) <= delta;
}

// Entry-multiset compatibility within delta. Greedy bipartite matching is
// exact here: at order <= 6 the entry values either coincide within delta or
// sit far apart, so groups never straddle the tolerance.
bool multisets_close(const std::vector<Complex>& a, const std::vector<Complex>& b, double delta) {
  std::vector<bool> used(b.size(), false);
  for (const Complex& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j]) continue;
      if (entries_close(x, b[j], delta)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct MatchSearch {
  const ComplexMatrix& g1;  // target, dephased
  const ComplexMatrix& mh;  // anchored dephased source
  double delta;
  std::size_t n;
  std::vector<std::size_t> srow;  // srow[i]: source row for target row i
  std::vector<std::size_t> scol;
  std::vector<bool> row_used, col_used;
  std::vector<std::vector<Complex>> g1_rows, mh_rows;

  MatchSearch(const ComplexMatrix& target, const ComplexMatrix& source, double d)
      : g1(target), mh(source), delta(d), n(target.rows()), srow(n), scol(n),
        row_used(n, false), col_used(n, false) {
    for (std::size_t i = 0; i < n; ++i) {
      g1_rows.push_back(g1.row(i));
      mh_rows.push_back(mh.row(i));
    }
    srow[0] = 0;
    scol[0] = 0;
    row_used[0] = true;
    col_used[0] = true;
  }

  bool assign_cols(std::size_t k) {
    if (k == n) return true;
    for (std::size_t m = 1; m < n; ++m) {
      if (col_used[m]) continue;
      bool ok = true;
      for (std::size_t i = 1; i < n && ok; ++i)
        ok = entries_close(mh(srow[i], m), g1(i, k), delta);
      if (!ok) continue;
      col_used[m] = true;
      scol[k] = m;
      if (assign_cols(k + 1)) return true;
      col_used[m] = false;
    }
    return false;
  }

  bool assign_rows(std::size_t i) {
    if (i == n) return assign_cols(1);
    for (std::size_t j = 1; j < n; ++j) {
      if (row_used[j]) continue;
      if (!multisets_close(g1_rows[i], mh_rows[j], delta)) continue;
      row_used[j] = true;
      srow[i] = j;
      if (assign_rows(i + 1)) return true;
      row_used[j] = false;
    }
    return false;
  }

  bool run() { return assign_rows(1); }
};

}  // namespace

bool is_hadamard(const ComplexMatrix& h, const Tolerance& tol) {
  if (!h.is_square()) throw NonSquare("is_hadamard: matrix not square");
  const std::size_t n = h.rows();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(std::abs(h(i, j)) - 1.0) > tol.threshold(1.0)) return false;
  ComplexMatrix gram = h * h.adjoint();
  for (std::size_t i = 0; i < n; ++i) gram(i, i) -= static_cast<double>(n);
  return gram.frobenius_norm() <= tol.threshold(static_cast<double>(n));
}

ComplexMatrix fourier(std::size_t n) {
  if (n == 0) throw InvariantViolation("fourier: order must be positive");
  ComplexMatrix f(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t m = (j * k) % n;
      f(j, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                    static_cast<double>(n));
    }
  return f;
}

ComplexMatrix family_n4(double a) {
  const Complex ip = std::polar(1.0, a + std::numbers::pi / 2.0);  // i e^{ia}
  return ComplexMatrix::from_rows({{1.0, 1.0, 1.0, 1.0},
                                   {1.0, ip, -1.0, -ip},
                                   {1.0, -1.0, 1.0, -1.0},
                                   {1.0, -ip, -1.0, ip}});
}

DephaseResult dephase(const ComplexMatrix& h, const Tolerance& tol) {
  if (!is_hadamard(h, tol)) throw NotHadamard("dephase: input is not a Hadamard matrix");
  return dephase_unchecked(h);
}

EquivalenceResult equivalent(const ComplexMatrix& h1, const ComplexMatrix& h2,
                             const Tolerance& tol) {
  if (!h1.is_square() || !h2.is_square()) throw NonSquare("equivalent: inputs must be square");
  if (h1.rows() != h2.rows()) throw OrderMismatch("equivalent: orders differ");
  if (!is_hadamard(h1, tol) || !is_hadamard(h2, tol))
    throw NotHadamard("equivalent: input is not a Hadamard matrix");

  const std::size_t n = h1.rows();
  if (n > kExhaustiveOrderCap) return {EquivalenceVerdict::unknown, std::nullopt, 0.0};

  const double delta = std::max(tol.threshold(1.0), 1e-9);
  const DephaseResult d1 = dephase_unchecked(h1);  // h1 = L1 G1 R1
  const DephaseResult d2 = dephase_unchecked(h2);  // h2 = L2 G2 R2

  std::vector<std::size_t> base(n);
  std::iota(base.begin(), base.end(), 0);

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::size_t> rowperm{r}, colperm{c};
      for (std::size_t i = 0; i < n; ++i) {
        if (i != r) rowperm.push_back(i);
        if (i != c) colperm.push_back(i);
      }
      const ComplexMatrix anchored = d2.h.submatrix(rowperm, colperm);
      const DephaseResult da = dephase_unchecked(anchored);  // anchored = Da Mh Db

      MatchSearch search(d1.h, da.h, delta);
      if (!search.run()) continue;

      // G1 = Ps Mh Qs; unwind the chain to h1 = L h2 R with L, R monomial.
      const ComplexMatrix ps = row_perm_matrix(search.srow);
      const ComplexMatrix qs = col_perm_matrix(search.scol);
      const ComplexMatrix pr = row_perm_matrix(rowperm);
      const ComplexMatrix pc = col_perm_matrix(colperm);

      const ComplexMatrix left = d1.d_left * ps * diagonal_inverse(da.d_left) * pr *
                                 diagonal_inverse(d2.d_left);
      const ComplexMatrix right = diagonal_inverse(d2.d_right) * pc *
                                  diagonal_inverse(da.d_right) * qs * d1.d_right;

      EquivalenceWitness w;
      factor_diag_perm(left, w.d1, w.p1);
      factor_perm_diag(right, w.p2, w.d2);

      const double res = distance(w.d1 * w.p1 * h2 * w.p2 * w.d2, h1);
      if (res <= kWitnessBound)
        return {EquivalenceVerdict::yes, std::move(w), res};
    }
  }
  return {EquivalenceVerdict::no, std::nullopt, 0.0};
}

}  // namespace qsc::hadamard
