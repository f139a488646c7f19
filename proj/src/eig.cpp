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

#include "qsc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsc {

namespace {

constexpr int kMaxSweeps = 100;

// One complex Jacobi rotation zeroing A(p,q). The rotation G is identity
// except G(p,p)=c, G(p,q)=s, G(q,p)=-s*e^{-i phi}, G(q,q)=c*e^{-i phi}
// with e^{i phi} the phase of A(p,q); applied as A <- G^dag A G, Q <- Q G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& q, std::size_t p, std::size_t pq) {
  const std::size_t n = a.rows();
  const Complex apq = a(p, pq);
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(pq, pq).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gp(c, 0.0);                 // G(p,p)
  const Complex gs(s, 0.0);                 // G(p,q)
  const Complex gq = c * std::conj(phase);  // G(q,q)
  const Complex gr = -s * std::conj(phase); // G(q,p)

  // B = A G (columns p, q change)
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, pq);
    a(r, p) = arp * gp + arq * gr;
    a(r, pq) = arp * gs + arq * gq;
  }
  // A' = G^dag B (rows p, q change)
  for (std::size_t col = 0; col < n; ++col) {
    const Complex apc = a(p, col);
    const Complex aqc = a(pq, col);
    a(p, col) = std::conj(gp) * apc + std::conj(gr) * aqc;
    a(pq, col) = std::conj(gs) * apc + std::conj(gq) * aqc;
  }
  a(p, pq) = 0.0;
  a(pq, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(pq, pq) = Complex(a(pq, pq).real(), 0.0);

  // Q <- Q G
  for (std::size_t r = 0; r < n; ++r) {
    const Complex qrp = q(r, p);
    const Complex qrq = q(r, pq);
    q(r, p) = qrp * gp + qrq * gr;
    q(r, pq) = qrp * gs + qrq * gq;
  }
}

}  // namespace

EighResult eigh(const ComplexMatrix& h, const Tolerance& tol) {
  if (!h.is_square()) throw NonSquare("eigh: matrix not square");
  const std::size_t n = h.rows();
  if (distance(h, h.adjoint()) > tol.threshold(h.frobenius_norm()))
    throw NotHermitian("eigh: matrix not Hermitian within tolerance");

  // Work on the symmetrized copy so eps-level asymmetry cannot drift.
  ComplexMatrix a = h + h.adjoint();
  a *= Complex(0.5, 0.0);
  ComplexMatrix q = ComplexMatrix::identity(n);

  const double base = a.frobenius_norm();
  if (n > 1 && base > 0.0) {
    const double stop = 1e-13 * std::max(1.0, base);
    const double skip = stop / (10.0 * static_cast<double>(n) * static_cast<double>(n));
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      bool rotated = false;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t r = p + 1; r < n; ++r)
          if (std::abs(a(p, r)) > skip) {
            jacobi_rotate(a, q, p, r);
            rotated = true;
          }
      if (!rotated || a.off_diagonal_norm() <= stop) break;
    }
    if (sweep == kMaxSweeps)
      throw ConvergenceFailure("eigh: Jacobi sweep cap exceeded");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EighResult out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    out.vectors.set_column(k, q.column(order[k]));
  }
  return out;
}

SvdResult svd(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw NonSquare("svd: matrix not square");
  const std::size_t n = a.rows();
  const double norm_a = a.frobenius_norm();

  const EighResult right = eigh(a.adjoint() * a, tol);

  // Right vectors ordered by descending eigenvalue; singular values measured
  // directly as ||A x|| (more accurate near zero than sqrt of the eigenvalue).
  std::vector<std::vector<Complex>> xs(n);
  std::vector<std::vector<Complex>> ys(n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = right.vectors.column(n - 1 - i);
    ys[i] = a * xs[i];
    s[i] = vec_norm(ys[i]);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return s[i] > s[j]; });

  const double cut = 1e-8 * std::max(1.0, norm_a);
  std::vector<std::vector<Complex>> ws;
  ws.reserve(n);

  // Kernel completion pool, built lazily from the eigenbasis of A A^dag.
  std::vector<std::vector<Complex>> pool;
  std::size_t pool_next = 0;

  auto orthogonalize = [&](std::vector<Complex>& w) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& prev : ws) {
        const Complex proj = vec_dot(prev, w);
        for (std::size_t r = 0; r < n; ++r) w[r] -= proj * prev[r];
      }
    return vec_norm(w);
  };

  SvdResult out;
  out.singular_values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    out.singular_values[k] = s[i];
    std::vector<Complex> w;
    if (s[i] > cut) {
      w = ys[i];
      for (auto& z : w) z /= s[i];
      const double nz = orthogonalize(w);
      for (auto& z : w) z /= nz;
    } else {
      if (pool.empty()) {
        const EighResult left = eigh(a * a.adjoint(), tol);
        for (std::size_t j = 0; j < n; ++j) pool.push_back(left.vectors.column(j));
        // identity columns as a last resort
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Complex> e(n, Complex(0.0, 0.0));
          e[j] = 1.0;
          pool.push_back(std::move(e));
        }
      }
      double nz = 0.0;
      while (pool_next < pool.size()) {
        w = pool[pool_next++];
        nz = orthogonalize(w);
        if (nz > 0.5) break;
      }
      for (auto& z : w) z /= nz;
    }
    ws.push_back(std::move(w));
  }

  out.u = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) out.u(i, r) = std::conj(ws[i][r]);

  // V with V^t = X, i.e. V = X^t where X holds the right vectors as columns.
  out.v = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) out.v(j, r) = xs[order[j]][r];

  return out;
}

namespace {

// Recursive core; inputs already validated.
ComplexMatrix joint_diag_core(const std::vector<ComplexMatrix>& mats, const Tolerance& tol) {
  const std::size_t n = mats.front().rows();
  if (n <= 1) return ComplexMatrix::identity(n);

  const EighResult first = eigh(mats.front(), tol);
  ComplexMatrix q = first.vectors;
  if (mats.size() == 1) return q;

  double lmax = 0.0;
  for (const double lam : first.eigenvalues) lmax = std::max(lmax, std::abs(lam));
  const double gap = 1e-6 * std::max(1.0, lmax);

  const std::vector<ComplexMatrix> rest(mats.begin() + 1, mats.end());
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && first.eigenvalues[hi] - first.eigenvalues[hi - 1] <= gap) ++hi;
    if (hi - lo > 1) {
      std::vector<std::size_t> idx(hi - lo);
      std::iota(idx.begin(), idx.end(), lo);
      ComplexMatrix qc(n, hi - lo);
      for (std::size_t j = 0; j < idx.size(); ++j) qc.set_column(j, q.column(idx[j]));
      std::vector<ComplexMatrix> sub;
      sub.reserve(rest.size());
      for (const auto& m : rest) {
        ComplexMatrix b = qc.adjoint() * m * qc;
        // symmetrize; the projection of a Hermitian matrix is Hermitian
        b = b + b.adjoint();
        b *= Complex(0.5, 0.0);
        sub.push_back(std::move(b));
      }
      const ComplexMatrix inner = joint_diag_core(sub, tol);
      const ComplexMatrix refined = qc * inner;
      for (std::size_t j = 0; j < idx.size(); ++j) q.set_column(idx[j], refined.column(j));
    }
    lo = hi;
  }
  return q;
}

}  // namespace

ComplexMatrix joint_diag_hermitian(const std::vector<ComplexMatrix>& family, const Tolerance& tol) {
  if (family.empty()) throw DimensionMismatch("joint_diag_hermitian: empty family");
  const std::size_t n = family.front().rows();
  for (const auto& m : family) {
    if (!m.is_square()) throw NonSquare("joint_diag_hermitian: member not square");
    if (m.rows() != n) throw DimensionMismatch("joint_diag_hermitian: member sizes differ");
    if (!is_hermitian(m, tol)) throw NotHermitian("joint_diag_hermitian: member not Hermitian");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double scale = family[i].frobenius_norm() * family[j].frobenius_norm();
      if (distance(family[i] * family[j], family[j] * family[i]) > tol.threshold(scale))
        throw NotCommuting("joint_diag_hermitian: members do not commute within tolerance");
    }

  const ComplexMatrix q = joint_diag_core(family, tol);

  for (const auto& m : family) {
    const ComplexMatrix d = q.adjoint() * m * q;
    if (d.off_diagonal_norm() > 1e-7 * std::max(1.0, m.frobenius_norm()))
      throw NotCommuting("joint_diag_hermitian: family not simultaneously diagonalizable");
  }
  return q;
}

}  // namespace qsc
