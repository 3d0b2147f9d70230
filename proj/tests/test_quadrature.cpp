// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mxe/quadrature.hpp"
#include "support/oracles.hpp"

using mxe::TriangleRule;
using mxe::triangle_quadrature;

namespace {

double integrate_monomial(const TriangleRule& rule, int a, int b) {
  double s = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q)
    s += rule.w[q] * std::pow(rule.x[q], a) * std::pow(rule.y[q], b);
  return s;
}

}  // namespace

TEST_CASE("degree 1 is the centroid rule") {
  const TriangleRule& rule = triangle_quadrature(1);
  REQUIRE(rule.size() == 1);
  CHECK(rule.x[0] == doctest::Approx(1.0 / 3.0));
  CHECK(rule.y[0] == doctest::Approx(1.0 / 3.0));
  CHECK(rule.w[0] == doctest::Approx(0.5));
}

TEST_CASE("xy integrates to 1/24 with the degree-2 rule") {
  const TriangleRule& rule = triangle_quadrature(2);
  CHECK(integrate_monomial(rule, 1, 1) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("weights positive and summing to the reference area") {
  for (int d = 1; d <= 12; ++d) {
    const TriangleRule& rule = triangle_quadrature(d);
    double sum = 0.0;
    for (double w : rule.w) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(std::abs(sum - 0.5) <= 1e-14);
  }
}

TEST_CASE("monomial exactness up to the stated degree") {
  for (int d = 1; d <= 12; ++d) {
    const TriangleRule& rule = triangle_quadrature(d);
    for (int a = 0; a + 0 <= d; ++a)
      for (int b = 0; a + b <= d; ++b) {
        const double exact = oracle::monomial_integral(a, b);
        CHECK(std::abs(integrate_monomial(rule, a, b) - exact) <= 1e-14);
      }
  }
}

TEST_CASE("random polynomials up to degree 10 match the symbolic integral") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int d = 1; d <= 10; ++d) {
    const TriangleRule& rule = triangle_quadrature(d);
    for (int rep = 0; rep < 3; ++rep) {
      double exact = 0.0;
      std::vector<std::array<double, 3>> terms;  // coeff, a, b
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
          const double c = uni(rng);
          terms.push_back({c, double(a), double(b)});
          exact += c * oracle::monomial_integral(a, b);
        }
      double approx = 0.0;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        double p = 0.0;
        for (const auto& t : terms)
          p += t[0] * std::pow(rule.x[q], int(t[1])) * std::pow(rule.y[q], int(t[2]));
        approx += rule.w[q] * p;
      }
      CHECK(std::abs(approx - exact) <= 1e-12);
    }
  }
}

TEST_CASE("unsupported degrees are rejected") {
  CHECK_THROWS_AS(triangle_quadrature(0), std::invalid_argument);
  CHECK_THROWS_AS(triangle_quadrature(13), std::invalid_argument);
}
