// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/eigsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <lapacke.h>

namespace mxe {

namespace {

// Unblocked Cholesky used to recover the failing pivot after dpotrf reports
// indefiniteness, and to apply the near-singular pivot guard uniformly.
bool cholesky_with_guard(DenseMatrix& m, int& bad_index, double& bad_value) {
  const int n = m.n_rows;
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(m(i, i)));
  const double floor = std::max(n * std::numeric_limits<double>::epsilon() * max_diag,
                                std::numeric_limits<double>::min());
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= m(j, k) * m(j, k);
    if (!(d > floor)) {
      bad_index = j;
      bad_value = d;
      return false;
    }
    d = std::sqrt(d);
    m(j, j) = d;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= m(i, k) * m(j, k);
      m(i, j) = s / d;
    }
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) m(i, j) = 0.0;
  return true;
}

void fix_vector_sign(std::vector<double>& x) {
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return;
  for (double v : x) {
    if (std::abs(v) > 1e-12 * scale) {
      if (v < 0.0)
        for (double& w : x) w = -w;
      return;
    }
  }
}

}  // namespace

FactorizationResult factorize_spd(const DenseMatrix& r) {
  FactorizationResult res;
  DenseMatrix work = r;
  const int n = work.n_rows;

  // Blocked LAPACK attempt first; fall back to the unblocked routine to
  // locate the offending pivot and to enforce the relative pivot floor.
  DenseMatrix lap = r;
  const int info = LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', n, lap.data.data(), n);
  bool need_guard = info != 0;
  if (info == 0) {
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(r(i, i)));
    for (int i = 0; i < n; ++i) {
      const double piv = lap(i, i) * lap(i, i);
      if (piv <= n * std::numeric_limits<double>::epsilon() * max_diag) {
        need_guard = true;
        break;
      }
    }
  }
  if (!need_guard) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i) lap(i, j) = 0.0;
    res.success = true;
    res.factor.f = std::move(lap);
    return res;
  }
  int bad_index = -1;
  double bad_value = 0.0;
  if (cholesky_with_guard(work, bad_index, bad_value)) {
    res.success = true;
    res.factor.f = std::move(work);
    return res;
  }
  res.success = false;
  res.pivot_index = bad_index;
  res.pivot_value = bad_value;
  return res;
}

FactorizationResult factorize_spd(const SymMatrix& r) { return factorize_spd(r.to_dense()); }

SignedSpectrum solve(const DenseMatrix& l, const DenseMatrix& r, const SolveOptions& opts) {
  const int n = l.n_rows;
  if (n > opts.dense_cap)
    throw std::runtime_error("solve: dimension " + std::to_string(n) +
                             " exceeds the dense cap " + std::to_string(opts.dense_cap));
  DenseMatrix a = l, b = r;
  std::vector<double> w(n);
  const char jobz = opts.want_vectors ? 'V' : 'N';
  const int info = LAPACKE_dsygv(LAPACK_COL_MAJOR, 1, jobz, 'L', n, a.data.data(), n,
                                 b.data.data(), n, w.data());
  if (info > n) throw IndefiniteRhsError(info - n - 1, 0.0);
  if (info != 0)
    throw std::runtime_error("solve: LAPACK dsygv failed with info " + std::to_string(info));

  SignedSpectrum spec;
  double max_abs = 0.0;
  for (double t : w) max_abs = std::max(max_abs, std::abs(t));
  const double zero = opts.zero_threshold * max_abs;

  for (int i = 0; i < n; ++i) {
    std::vector<double> vec;
    if (opts.want_vectors) {
      vec.assign(a.data.begin() + std::size_t(i) * n, a.data.begin() + std::size_t(i + 1) * n);
      fix_vector_sign(vec);
    }
    if (std::abs(w[i]) <= zero) {
      spec.zero_cluster.push_back(w[i]);
    } else if (w[i] < 0.0) {
      spec.tau_neg.push_back(w[i]);
      if (opts.want_vectors) spec.neg_vectors.push_back(std::move(vec));
    } else {
      spec.tau_pos.push_back(w[i]);
      if (opts.want_vectors) spec.pos_vectors.push_back(std::move(vec));
    }
  }
  // Ascending from LAPACK: tau_neg is already tau^-_1 <= ...; the positive
  // branch is reported largest-first.
  std::reverse(spec.tau_pos.begin(), spec.tau_pos.end());
  std::reverse(spec.pos_vectors.begin(), spec.pos_vectors.end());
  return spec;
}

SignedSpectrum solve(const Pencil& pencil, const SolveOptions& opts) {
  return solve(pencil.L().to_dense(), pencil.R().to_dense(), opts);
}

Inertia inertia(const DenseMatrix& m, double zero_tol) {
  const int n = m.n_rows;
  DenseMatrix a = m;
  std::vector<lapack_int> ipiv(n);
  const int info =
      LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, a.data.data(), n, ipiv.data());
  if (info < 0) throw std::runtime_error("inertia: dsytrf failed");

  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(m(i, i)));
  if (scale == 0.0) scale = 1.0;

  Inertia out;
  int i = 0;
  while (i < n) {
    if (ipiv[i] > 0) {
      const double d = a(i, i);
      if (std::abs(d) <= zero_tol * scale)
        ++out.n_zero;
      else if (d < 0.0)
        ++out.n_neg;
      else
        ++out.n_pos;
      ++i;
    } else {
      // 2x2 block: eigenvalues d1*d2 - o^2 < 0 means one of each sign.
      const double d1 = a(i, i), d2 = a(i + 1, i + 1), o = a(i + 1, i);
      const double det = d1 * d2 - o * o;
      const double tr = d1 + d2;
      if (std::abs(det) <= zero_tol * zero_tol * scale * scale) {
        ++out.n_zero;
        if (std::abs(tr) <= zero_tol * scale)
          ++out.n_zero;
        else if (tr < 0.0)
          ++out.n_neg;
        else
          ++out.n_pos;
      } else if (det < 0.0) {
        ++out.n_neg;
        ++out.n_pos;
      } else if (tr < 0.0) {
        out.n_neg += 2;
      } else {
        out.n_pos += 2;
      }
      i += 2;
    }
  }
  return out;
}

std::vector<double> generalized_eigenvalues(const DenseMatrix& a, const DenseMatrix& b) {
  const int n = a.n_rows;
  DenseMatrix aa = a, bb = b;
  std::vector<double> w(n);
  const int info = LAPACKE_dsygv(LAPACK_COL_MAJOR, 1, 'N', 'L', n, aa.data.data(), n,
                                 bb.data.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("generalized_eigenvalues: dsygv failed with info " +
                             std::to_string(info));
  return w;
}

}  // namespace mxe
