// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include "mxe/assembly.hpp"
#include "mxe/linalg.hpp"

namespace mxe {

struct IndefiniteRhsError : std::runtime_error {
  int pivot_index;
  double pivot_value;
  IndefiniteRhsError(int index, double value)
      : std::runtime_error("right-hand matrix is not positive definite (pivot " +
                           std::to_string(index) + " = " + std::to_string(value) + ")"),
        pivot_index(index),
        pivot_value(value) {}
};

/// Cholesky factor of an SPD matrix (lower triangular, R = F F^T).
struct SpdFactor {
  DenseMatrix f;  // lower triangle valid
};

struct FactorizationResult {
  bool success = false;
  SpdFactor factor;       // valid on success
  int pivot_index = -1;   // 0-based failing pivot on failure
  double pivot_value = 0.0;
};

/// Attempts a Cholesky factorization.  Indefiniteness (including numerically
/// singular pivots below n*eps relative to the diagonal scale) is reported,
/// not thrown; the caller decides how to proceed.
FactorizationResult factorize_spd(const DenseMatrix& r);
FactorizationResult factorize_spd(const SymMatrix& r);

struct SolveOptions {
  double zero_threshold = 1e-10;  ///< relative threshold for the zero cluster
  bool want_vectors = false;
  int dense_cap = 8000;           ///< refuse dense solves above this dimension
};

/// Signed spectrum of the pencil L x = tau R x with R positive definite.
/// tau_neg ascending (most negative first); tau_pos descending (largest
/// positive first), matching the branch ordering tau^-_1 <= ... and
/// ... <= tau^+_1.  Eigenvectors, when requested, are R-orthonormal with the
/// sign fixed so the first nonzero entry is positive.
struct SignedSpectrum {
  std::vector<double> tau_neg, tau_pos, zero_cluster;
  std::vector<std::vector<double>> neg_vectors, pos_vectors;
  int m_neg() const { return static_cast<int>(tau_neg.size()); }
  int m_pos() const { return static_cast<int>(tau_pos.size()); }
};

SignedSpectrum solve(const Pencil& pencil, const SolveOptions& opts = {});
SignedSpectrum solve(const DenseMatrix& l, const DenseMatrix& r, const SolveOptions& opts = {});

struct Inertia {
  int n_neg = 0, n_zero = 0, n_pos = 0;
};

/// Eigenvalue sign counts of a symmetric matrix via a Bunch-Kaufman LDL^T
/// factorization (Sylvester's law of inertia).
Inertia inertia(const DenseMatrix& m, double zero_tol = 1e-12);

/// All eigenvalues (ascending) of the symmetric generalized problem
/// A x = omega B x with B positive definite; the plain Galerkin spectrum.
std::vector<double> generalized_eigenvalues(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace mxe
