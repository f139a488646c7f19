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

#include "qsc/weak_svd.hpp"

#include <cmath>

#include "qsc/eig.hpp"
#include "qsc/rng.hpp"

namespace qsc::weak_svd {

namespace {

void validate_family(const std::vector<ComplexMatrix>& as) {
  if (as.empty()) throw DimensionMismatch("weak_svd: empty family");
  const std::size_t n = as.front().rows();
  for (const auto& a : as) {
    if (!a.is_square()) throw NonSquare("weak_svd: member not square");
    if (a.rows() != n) throw DimensionMismatch("weak_svd: member sizes differ");
  }
}

std::vector<double> norms(const std::vector<ComplexMatrix>& as) {
  std::vector<double> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(a.frobenius_norm());
  return out;
}

constexpr int kWeightDraws = 8;
constexpr int kMaxDepth = 32;

bool all_rotated_diagonal(const std::vector<ComplexMatrix>& as, const ComplexMatrix& u,
                          const ComplexMatrix& v, const Tolerance& tol) {
  const ComplexMatrix vt = v.transpose();
  for (const auto& a : as) {
    const ComplexMatrix t = u * a * vt;
    if (t.off_diagonal_norm() > tol.threshold(a.frobenius_norm())) return false;
  }
  return true;
}

// Attempts one weight draw (plus cluster recursion); on success u/v hold a
// valid witness.
bool construct(const std::vector<ComplexMatrix>& as, Rng& rng, const Tolerance& tol, int depth,
               ComplexMatrix& u, ComplexMatrix& v) {
  const std::size_t n = as.front().rows();
  const std::size_t count = as.size();

  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < count; ++k) {
    const Complex w = rng.normal_complex();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += w * as[k](i, j);
  }
  SvdResult dec = svd(m, tol);

  if (all_rotated_diagonal(as, dec.u, dec.v, tol)) {
    u = dec.u;
    v = dec.v;
    return true;
  }
  if (depth >= kMaxDepth) return false;

  // Degenerate singular clusters of M leave a unitary ambiguity; resolve it
  // block by block. Singular values are descending, so clusters are
  // contiguous.
  const double gap = 1e-6 * std::max(1.0, dec.singular_values.front());
  std::size_t lo = 0;
  const ComplexMatrix vt0 = dec.v.transpose();
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(count);
  for (const auto& a : as) rotated.push_back(dec.u * a * vt0);

  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && dec.singular_values[hi - 1] - dec.singular_values[hi] <= gap) ++hi;
    if (hi - lo == n) return false;  // one big cluster: retry with new weights
    if (hi - lo > 1) {
      std::vector<std::size_t> idx(hi - lo);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = lo + i;
      std::vector<ComplexMatrix> blocks;
      blocks.reserve(count);
      for (const auto& t : rotated) blocks.push_back(t.submatrix(idx, idx));
      ComplexMatrix uc, vc;
      bool ok = false;
      for (int tries = 0; tries < 4 && !ok; ++tries)
        ok = construct(blocks, rng, tol, depth + 1, uc, vc);
      if (!ok) return false;
      // Embed: rows lo..hi of U (resp. V) are mixed by the block witness.
      for (std::size_t col = 0; col < n; ++col) {
        std::vector<Complex> ucol(idx.size()), vcol(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          ucol[i] = dec.u(lo + i, col);
          vcol[i] = dec.v(lo + i, col);
        }
        for (std::size_t i = 0; i < idx.size(); ++i) {
          Complex su = 0.0, sv = 0.0;
          for (std::size_t j = 0; j < idx.size(); ++j) {
            su += uc(i, j) * ucol[j];
            sv += vc(i, j) * vcol[j];
          }
          dec.u(lo + i, col) = su;
          dec.v(lo + i, col) = sv;
        }
      }
    }
    lo = hi;
  }

  if (all_rotated_diagonal(as, dec.u, dec.v, tol)) {
    u = dec.u;
    v = dec.v;
    return true;
  }
  return false;
}

}  // namespace

bool check_strong(const std::vector<ComplexMatrix>& as, const Tolerance& tol) {
  validate_family(as);
  const std::vector<double> nf = norms(as);
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      const double thr = tol.threshold(nf[i] * nf[j]);
      if (distance(as[i] * as[j].adjoint(), as[j] * as[i].adjoint()) > thr) return false;
      if (distance(as[i].adjoint() * as[j], as[j].adjoint() * as[i]) > thr) return false;
    }
  return true;
}

bool check_weak(const std::vector<ComplexMatrix>& as, const Tolerance& tol) {
  validate_family(as);
  const std::vector<double> nf = norms(as);
  const std::size_t count = as.size();
  // The identity for (j,k,l) is the identity for (l,k,j); j < l suffices.
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t l = j + 1; l < count; ++l)
      for (std::size_t k = 0; k < count; ++k) {
        const ComplexMatrix lhs = as[j] * as[k].adjoint() * as[l];
        const ComplexMatrix rhs = as[l] * as[k].adjoint() * as[j];
        if (distance(lhs, rhs) > tol.threshold(nf[j] * nf[k] * nf[l])) return false;
      }
  return true;
}

std::optional<WeakViolation> first_weak_violation(const std::vector<ComplexMatrix>& as,
                                                  const Tolerance& tol) {
  validate_family(as);
  const std::vector<double> nf = norms(as);
  const std::size_t count = as.size();
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t l = j + 1; l < count; ++l)
      for (std::size_t k = 0; k < count; ++k) {
        const ComplexMatrix lhs = as[j] * as[k].adjoint() * as[l];
        const ComplexMatrix rhs = as[l] * as[k].adjoint() * as[j];
        const double dist = distance(lhs, rhs);
        if (dist > tol.threshold(nf[j] * nf[k] * nf[l]))
          return WeakViolation{dist / std::max(1.0, nf[j] * nf[k] * nf[l]), {j, k, l}};
      }
  return std::nullopt;
}

bool check_weak_alt(const std::vector<ComplexMatrix>& as, const Tolerance& tol) {
  validate_family(as);
  const std::vector<double> nf = norms(as);
  const std::size_t count = as.size();
  // All ordered pairs, the k = l case being automatic (Hermitian products).
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t l = 0; l < count; ++l) {
      const ComplexMatrix b = as[k].adjoint() * as[l];
      const double scale = (nf[k] * nf[l]) * (nf[k] * nf[l]);
      if (distance(b * b.adjoint(), b.adjoint() * b) > tol.threshold(scale)) return false;
    }
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t l = 0; l < count; ++l) {
        const ComplexMatrix lhs = as[j] * as[k].adjoint() * as[k] * as[l].adjoint();
        const ComplexMatrix rhs = as[k] * as[l].adjoint() * as[j] * as[k].adjoint();
        if (distance(lhs, rhs) > tol.threshold(nf[j] * nf[k] * nf[k] * nf[l])) return false;
      }
  return true;
}

WeakSvdResult diagonalize(const std::vector<ComplexMatrix>& as, const Tolerance& tol,
                          std::uint64_t seed) {
  validate_family(as);
  if (!check_weak(as, tol))
    throw NotSimultaneouslyDiagonalizable(
        "diagonalize: family fails the weak-SVD criterion");

  Rng rng(seed);
  ComplexMatrix u, v;
  for (int attempt = 0; attempt < kWeightDraws; ++attempt) {
    if (construct(as, rng, tol, 0, u, v)) {
      WeakSvdResult out;
      out.u = std::move(u);
      out.v = std::move(v);
      const ComplexMatrix vt = out.v.transpose();
      out.diagonals.reserve(as.size());
      for (const auto& a : as) out.diagonals.push_back((out.u * a * vt).diag());
      return out;
    }
  }
  throw ConstructionFailure("diagonalize: witness construction failed after retries");
}

double residual(const std::vector<ComplexMatrix>& as, const WeakSvdResult& result) {
  if (as.empty()) throw DimensionMismatch("residual: empty family");
  const std::size_t n = as.front().rows();
  if (result.u.rows() != n || result.u.cols() != n || result.v.rows() != n ||
      result.v.cols() != n)
    throw DimensionMismatch("residual: witness size does not match family");
  const ComplexMatrix vt = result.v.transpose();
  double worst = 0.0;
  for (const auto& a : as) {
    if (a.rows() != n || a.cols() != n)
      throw DimensionMismatch("residual: member sizes differ");
    worst = std::max(worst, (result.u * a * vt).off_diagonal_norm());
  }
  return worst;
}

}  // namespace qsc::weak_svd
