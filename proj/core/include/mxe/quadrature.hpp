// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace mxe {

/// Quadrature rule on the reference triangle {(0,0),(1,0),(0,1)}.
/// All weights are positive and sum to the reference area 1/2.
struct TriangleRule {
  int degree = 0;  ///< every polynomial up to this total degree is integrated exactly
  std::vector<double> x, y, w;

  std::size_t size() const { return w.size(); }
};

/// Returns a rule with the requested polynomial exactness (1 <= degree <= 12).
/// Degree 1 is the one-point centroid rule; degree 2 the classical symmetric
/// three-point rule; higher degrees use a collapsed Gauss-Legendre tensor rule,
/// which keeps every weight positive at any order.
/// Throws std::invalid_argument for unsupported degrees.
const TriangleRule& triangle_quadrature(int degree);

/// Nodes and weights of the n-point Gauss-Legendre rule on [0,1].
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace mxe
