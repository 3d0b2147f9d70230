// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "mxe/fespace.hpp"
#include "mxe/quadrature.hpp"
#include "mxe/reference.hpp"
#include "support/properties.hpp"

using namespace mxe;

namespace {

AnalyticField constant_field(double e1, double e2, double h) {
  AnalyticField f;
  f.e1 = [e1](Point2) { return e1; };
  f.e2 = [e2](Point2) { return e2; };
  f.h = [h](Point2) { return h; };
  f.curl_e = [](Point2) { return 0.0; };
  f.curl_h = [](Point2) { return Point2{0.0, 0.0}; };
  return f;
}

}  // namespace

TEST_CASE("square n=1 r=1: every node is a boundary corner") {
  const Mesh mesh = generate({DomainKind::square, 1});
  const FESpace space(mesh, 1);
  CHECK(space.n_scalar_nodes() == 4);
  CHECK(space.dof_count(kH) == 4);
  CHECK(space.dof_count(kE1) == 0);
  CHECK(space.dof_count(kE2) == 0);
  CHECK(space.n_dofs() == 4);
}

TEST_CASE("square n=2 r=1: hand-enumerated BC pattern gives 15 DOFs") {
  const Mesh mesh = generate({DomainKind::square, 2});
  const FESpace space(mesh, 1);
  CHECK(space.n_scalar_nodes() == 9);
  CHECK(space.dof_count(kH) == 9);
  // interior node contributes 2 E DOFs, edge midpoints keep the normal
  // component (1 each), corners lose both: 2 + 4 = 6
  CHECK(space.dof_count(kE1) + space.dof_count(kE2) == 6);
  CHECK(space.n_dofs() == 15);
}

TEST_CASE("P2 scalar node count is vertices plus edges") {
  for (DomainKind kind : {DomainKind::square, DomainKind::lshape}) {
    const Mesh mesh = generate({kind, 4});
    const FESpace space(mesh, 2);
    std::set<std::pair<int, int>> edges;
    for (const auto& tri : mesh.triangles)
      for (int e = 0; e < 3; ++e)
        edges.insert({std::min(tri[e], tri[(e + 1) % 3]),
                      std::max(tri[e], tri[(e + 1) % 3])});
    CHECK(space.n_scalar_nodes() == int(mesh.n_vertices() + edges.size()));
  }
}

TEST_CASE("order bounds are enforced") {
  const Mesh mesh = generate({DomainKind::square, 2});
  CHECK_THROWS_AS(FESpace(mesh, 0), std::invalid_argument);
  CHECK_THROWS_AS(FESpace(mesh, 6), std::invalid_argument);
}

TEST_CASE("interpolation of zero and of a constant H field") {
  const Mesh mesh = generate({DomainKind::square, 2});
  const FESpace space(mesh, 2);
  const CoefficientVector zero = interpolate(space, constant_field(0, 0, 0));
  for (double v : zero.values) CHECK(v == 0.0);

  const CoefficientVector ones = interpolate(space, constant_field(0, 0, 1));
  for (int node = 0; node < space.n_scalar_nodes(); ++node) {
    CHECK(ones.values[space.dof(node, kH)] == 1.0);
    for (Component c : {kE1, kE2})
      if (space.dof(node, c) >= 0) CHECK(ones.values[space.dof(node, c)] == 0.0);
  }
}

TEST_CASE("interpolant of the (1,0) mode matches pointwise at r=3") {
  const Mesh mesh = generate({DomainKind::square, 8});
  const FESpace space(mesh, 3);
  const AnalyticField mode = square_mode(1, 0);
  const CoefficientVector u = interpolate(space, mode);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  std::uniform_int_distribution<int> pick(0, int(mesh.n_triangles()) - 1);
  for (int rep = 0; rep < 50; ++rep) {
    const int t = pick(rng);
    double a = uni(rng), b = uni(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const Point2 ref{a, b};
    const auto& tri = mesh.triangles[t];
    const Point2 v0 = mesh.vertices[tri[0]];
    const Point2 d1 = mesh.vertices[tri[1]] - v0, d2 = mesh.vertices[tri[2]] - v0;
    const Point2 phys{v0.x + d1.x * ref.x + d2.x * ref.y,
                      v0.y + d1.y * ref.x + d2.y * ref.y};
    const auto val = evaluate(u, t, ref);
    CHECK(std::abs(val[0] - mode.e1(phys)) <= 1e-3);
    CHECK(std::abs(val[1] - mode.e2(phys)) <= 1e-3);
    CHECK(std::abs(val[2] - mode.h(phys)) <= 1e-3);
  }
}

TEST_CASE("hcurl distance: self-distance shrinks under refinement") {
  const AnalyticField mode = square_mode(1, 0);
  double prev = -1.0;
  for (int n : {2, 4, 8}) {
    const Mesh mesh = generate({DomainKind::square, n});
    const FESpace space(mesh, 1);
    const CoefficientVector u = interpolate(space, mode);
    const double d = hcurl_distance(space, u, {mode});
    if (prev > 0.0) CHECK(d < 0.6 * prev);
    prev = d;
  }
}

TEST_CASE("hcurl distance to an orthogonal span is the full norm") {
  const Mesh mesh = generate({DomainKind::square, 4});
  const FESpace space(mesh, 2);
  const CoefficientVector u = interpolate(space, constant_field(0, 0, 1));

  AnalyticField e_only;  // pure E field, no H: curl-orthogonal to constant H
  e_only.e1 = [](Point2 p) { return std::sin(p.y); };
  e_only.e2 = [](Point2 p) { return std::sin(p.x); };
  e_only.h = [](Point2) { return 0.0; };
  e_only.curl_e = [](Point2 p) { return std::cos(p.x) - std::cos(p.y); };
  e_only.curl_h = [](Point2) { return Point2{0.0, 0.0}; };

  const double d = hcurl_distance(space, u, {e_only});
  const double full = hcurl_norm(space, u);
  CHECK(d == doctest::Approx(full).epsilon(1e-10));
}

TEST_CASE("hcurl distance rejects an empty reference list") {
  const Mesh mesh = generate({DomainKind::square, 2});
  const FESpace space(mesh, 1);
  const CoefficientVector u = interpolate(space, constant_field(0, 0, 1));
  CHECK_THROWS_AS(hcurl_distance(space, u, {}), std::invalid_argument);
}

TEST_CASE("partition of unity at quadrature points") {
  const Mesh mesh = generate({DomainKind::square, 2});
  for (int r = 1; r <= 5; ++r) {
    const FESpace space(mesh, r);
    const TriangleRule& rule = triangle_quadrature(2 * r);
    std::vector<double> phi;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      space.basis_values({rule.x[q], rule.y[q]}, phi);
      double sum = 0.0;
      for (double p : phi) sum += p;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("interpolation reproduces polynomials of degree <= r on H") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const Mesh mesh = generate({DomainKind::square, 2});
  for (int r = 1; r <= 4; ++r) {
    const FESpace space(mesh, r);
    std::vector<double> coeff;
    for (int a = 0; a <= r; ++a)
      for (int b = 0; a + b <= r; ++b) coeff.push_back(uni(rng));
    AnalyticField f = constant_field(0, 0, 0);
    f.h = [&coeff, r](Point2 p) {
      double s = 0.0;
      int k = 0;
      for (int a = 0; a <= r; ++a)
        for (int b = 0; a + b <= r; ++b) s += coeff[k++] * std::pow(p.x, a) * std::pow(p.y, b);
      return s;
    };
    const CoefficientVector u = interpolate(space, f);
    const TriangleRule& rule = triangle_quadrature(2 * r);
    for (int t = 0; t < int(mesh.n_triangles()); ++t) {
      const auto& tri = mesh.triangles[t];
      const Point2 v0 = mesh.vertices[tri[0]];
      const Point2 d1 = mesh.vertices[tri[1]] - v0, d2 = mesh.vertices[tri[2]] - v0;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Point2 ref{rule.x[q], rule.y[q]};
        const Point2 phys{v0.x + d1.x * ref.x + d2.x * ref.y,
                          v0.y + d1.y * ref.x + d2.y * ref.y};
        CHECK(std::abs(evaluate(u, t, ref)[2] - f.h(phys)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("boundary trace property group") {
  CHECK(props::boundary_trace() == "");
}
