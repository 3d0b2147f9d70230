// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "mxe/fespace.hpp"
#include "mxe/linalg.hpp"

namespace mxe {

/// Piecewise-constant permittivity/permeability per region tag.
/// All values must be strictly positive and finite.
struct MaterialCoefficients {
  std::map<int, double> eps, mu;

  static MaterialCoefficients uniform(double eps_value = 1.0, double mu_value = 1.0);
  /// Transmission layout: mu = 1 everywhere, eps = 1 on quadrants 1,2 and
  /// 1/2 on quadrants 3,4.
  static MaterialCoefficients transmission_quadrants();

  double eps_of(int tag) const;
  double mu_of(int tag) const;
};

/// The three symmetric Galerkin matrices every shifted pencil is built from:
///   A: mixed curl form      a(u,v) = int curl(H_u) . E_v + curl(E_u) H_v
///   B: weighted mass        b(u,v) = int eps E_u.E_v + mu H_u H_v
///   C: weighted curl-curl   c(u,v) = int 1/mu curl(E_u) curl(E_v)
///                                  + int 1/eps curl(H_u) . curl(H_v)
/// All three share one sparsity pattern and are assembled exactly
/// symmetrically (the element integrand is symmetrised, not the global
/// matrix).  Quadrature exactness is 2r, so the forms are exact for
/// piecewise-constant coefficients.
struct FormMatrices {
  const FESpace* space = nullptr;
  SymPattern pattern;
  std::vector<double> a, b, c;

  SymMatrix A() const { return {&pattern, a}; }
  SymMatrix B() const { return {&pattern, b}; }
  SymMatrix C() const { return {&pattern, c}; }
};

/// Shifted pencil L x = tau R x with L = A - tB and R = C - 2tA + t^2 B.
/// R is positive semidefinite by construction: x' R x equals the squared L2
/// norm of (P^-1 M1 - t P) u_x.
struct Pencil {
  const FormMatrices* forms = nullptr;
  double t = 0.0;
  SymPattern pattern;  // shared copy of the forms' pattern
  std::vector<double> l, r;

  SymMatrix L() const { return {&pattern, l}; }
  SymMatrix R() const { return {&pattern, r}; }
};

/// Assembles the three form matrices.  Throws std::invalid_argument when a
/// region tag of the mesh is missing from `mat` or a coefficient is not
/// strictly positive.
FormMatrices assemble(const FESpace& space, const MaterialCoefficients& mat);

/// Sparse linear combination L = A - tB, R = C - 2tA + t^2 B.
Pencil build_pencil(const FormMatrices& fm, double t);

/// Quadrature value of || (P^-1 M1 - t P) u ||_0^2 for the field represented
/// by x, evaluated independently of the assembled matrices (test oracle for
/// the pencil's right-hand side).
double shifted_residual_norm2(const FESpace& space, const MaterialCoefficients& mat,
                              const std::vector<double>& x, double t);

}  // namespace mxe
