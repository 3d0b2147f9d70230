// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference computations, deliberately independent of the library's
// LAPACK-backed solve path: a hand-rolled LU determinant, characteristic-root
// bisection for small pencils, and exact monomial integrals on the reference
// triangle.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mxe/linalg.hpp"

namespace oracle {

/// Sign of det(M) with M given densely; 0 for (numerically) singular.
int det_sign(const mxe::DenseMatrix& m);

/// Eigenvalues of L x = tau R x (R SPD) for small dimensions, found as sign
/// changes of det(L - tau R) by recursive bisection.  Misses roots of even
/// multiplicity, so callers use pencils with distinct eigenvalues.
std::vector<double> pencil_eigenvalues(const mxe::DenseMatrix& l, const mxe::DenseMatrix& r,
                                       double tol = 1e-12);

/// Rigorous-enough lower bound for lambda_min of an SPD matrix via bisection
/// with an unblocked Cholesky test.
double spd_lambda_min_lower(const mxe::DenseMatrix& r);

/// Exact integral of x^a y^b over the reference triangle {(0,0),(1,0),(0,1)}:
/// a! b! / (a+b+2)!.
double monomial_integral(int a, int b);

/// Random symmetric matrix with entries in [-1,1].
mxe::DenseMatrix random_symmetric(int n, std::mt19937_64& rng);

/// Random SPD matrix (diagonally shifted random symmetric).
mxe::DenseMatrix random_spd(int n, std::mt19937_64& rng);

}  // namespace oracle
