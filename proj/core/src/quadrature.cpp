// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mxe {

void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  // Nodes on [-1,1] by Newton iteration on P_n, then mapped to [0,1].
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double weight = 2.0 / ((1.0 - z * z) * pp * pp);
    x[i] = 0.5 * (1.0 - z);
    x[n - 1 - i] = 0.5 * (1.0 + z);
    w[i] = 0.5 * weight;
    w[n - 1 - i] = 0.5 * weight;
  }
}

namespace {

TriangleRule make_rule(int degree) {
  TriangleRule rule;
  rule.degree = degree;
  if (degree <= 1) {
    rule.x = {1.0 / 3.0};
    rule.y = {1.0 / 3.0};
    rule.w = {0.5};
    return rule;
  }
  if (degree == 2) {
    rule.x = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    rule.y = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
    rule.w = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
    return rule;
  }
  // Duffy map (u,v) -> (u, v(1-u)) with Jacobian (1-u).  The integrand of a
  // degree-d polynomial has u-degree at most d+1 and v-degree at most d.
  const int nu = (degree + 3) / 2;
  const int nv = (degree + 2) / 2;
  std::vector<double> xu, wu, xv, wv;
  gauss_legendre_01(nu, xu, wu);
  gauss_legendre_01(nv, xv, wv);
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      rule.x.push_back(xu[i]);
      rule.y.push_back(xv[j] * (1.0 - xu[i]));
      rule.w.push_back(wu[i] * wv[j] * (1.0 - xu[i]));
    }
  }
  return rule;
}

}  // namespace

const TriangleRule& triangle_quadrature(int degree) {
  if (degree < 1 || degree > 12)
    throw std::invalid_argument("triangle_quadrature: degree must be in [1,12], got " +
                                std::to_string(degree));
  static std::map<int, TriangleRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, make_rule(degree)).first;
  return it->second;
}

}  // namespace mxe
