// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "properties.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mxe/assembly.hpp"
#include "mxe/enclosure.hpp"
#include "mxe/eigsolve.hpp"
#include "mxe/fespace.hpp"
#include "mxe/io.hpp"
#include "mxe/mesh.hpp"
#include "mxe/quadrature.hpp"

namespace props {

using namespace mxe;

namespace {

std::string fail(const std::string& msg) { return msg; }

}  // namespace

std::string assembly_symmetry_and_semidefiniteness() {
  for (DomainKind kind : {DomainKind::square, DomainKind::square4}) {
    DomainSpec spec{kind, 4};
    const Mesh mesh = generate(spec);
    const FESpace space(mesh, 2);
    const MaterialCoefficients mat = kind == DomainKind::square4
                                         ? MaterialCoefficients::transmission_quadrants()
                                         : MaterialCoefficients::uniform();
    const FormMatrices fm = assemble(space, mat);

    // Upper-triangle storage makes A = A^T structural; verify densified.
    for (const auto* vals : {&fm.a, &fm.b, &fm.c}) {
      SymMatrix m{&fm.pattern, *vals};
      DenseMatrix d = m.to_dense();
      for (int i = 0; i < d.n_rows; ++i)
        for (int j = 0; j < i; ++j)
          if (d(i, j) != d(j, i)) return fail("densified form matrix not symmetric");
    }
    // B positive definite, R(t) positive semidefinite.
    if (!factorize_spd(fm.B()).success) return fail("mass matrix not SPD");
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (double t : {0.0, 0.5, 1.3}) {
      const Pencil pencil = build_pencil(fm, t);
      const SymMatrix r = pencil.R();
      for (int rep = 0; rep < 16; ++rep) {
        std::vector<double> x(space.n_dofs());
        for (double& v : x) v = uni(rng);
        const double q = r.quadratic_form(x);
        double xx = 0.0;
        for (double v : x) xx += v * v;
        if (q < -1e-10 * xx) {
          std::ostringstream msg;
          msg << "x'Rx = " << q << " < 0 at t = " << t;
          return fail(msg.str());
        }
      }
    }
  }
  return {};
}

std::string spectrum_symmetry_about_zero() {
  DomainSpec spec{DomainKind::square, 4};
  const Mesh mesh = generate(spec);
  const FESpace space(mesh, 1);
  const FormMatrices fm = assemble(space, MaterialCoefficients::uniform());
  const std::vector<double> omega =
      generalized_eigenvalues(fm.A().to_dense(), fm.B().to_dense());
  double scale = 0.0;
  for (double w : omega) scale = std::max(scale, std::abs(w));
  // ascending spectrum: omega[i] should pair with -omega[n-1-i]
  const int n = static_cast<int>(omega.size());
  for (int i = 0; i < n; ++i)
    if (std::abs(omega[i] + omega[n - 1 - i]) > 1e-8 * scale)
      return fail("generalized spectrum of (A,B) is not symmetric about 0");
  // gradient-type kernel: zero is an eigenvalue on any mesh with an interior vertex
  bool has_zero = false;
  for (double w : omega) has_zero = has_zero || std::abs(w) <= 1e-8 * scale;
  if (!has_zero) return fail("no zero eigenvalue in the (A,B) spectrum");
  return {};
}

std::string nested_refinement_bound_monotonicity() {
  // Nested trial spaces: rho+ never increases and rho- never decreases.
  DomainSpec spec{DomainKind::square, 4};
  Mesh mesh = generate(spec);
  const double t_up = 0.5, t_low = 1.2;
  std::vector<std::vector<double>> ups, lows;
  for (int level = 0; level < 3; ++level) {
    if (level > 0) mesh = refine_uniform(mesh);
    const FESpace space(mesh, 1);
    const FormMatrices fm = assemble(space, MaterialCoefficients::uniform());
    try {
      ups.push_back(bounds_at(fm, t_up, Side::upper, t_low).rho);
      lows.push_back(bounds_at(fm, t_low, Side::lower, t_up).rho);
    } catch (const BoundsError&) {
      ups.push_back({});
      lows.push_back({});
    }
  }
  for (std::size_t lev = 1; lev < ups.size(); ++lev) {
    for (std::size_t j = 0; j < std::min(ups[lev - 1].size(), ups[lev].size()); ++j)
      if (ups[lev][j] > ups[lev - 1][j] + 1e-12)
        return fail("upper bound increased under nested refinement");
    for (std::size_t j = 0; j < std::min(lows[lev - 1].size(), lows[lev].size()); ++j)
      if (lows[lev][j] < lows[lev - 1][j] - 1e-12)
        return fail("lower bound decreased under nested refinement");
  }
  if (ups.back().empty() || lows.back().empty())
    return fail("no bounds available on the finest level");
  return {};
}

std::string boundary_trace() {
  // |E.t| <= 1e-12 at boundary quadrature points for arbitrary coefficients.
  for (DomainKind kind : {DomainKind::square, DomainKind::lshape, DomainKind::slit}) {
    DomainSpec spec{kind, 4};
    const Mesh mesh = generate(spec);
    for (int r : {1, 3}) {
      const FESpace space(mesh, r);
      std::mt19937_64 rng(11);
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      CoefficientVector u{&space, std::vector<double>(space.n_dofs())};
      for (double& v : u.values) v = uni(rng);

      for (const auto& be : mesh.boundary_edges) {
        // locate the owning triangle and the local reference segment
        for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t) {
          const auto& tri = mesh.triangles[t];
          int la = -1, lb = -1;
          for (int k = 0; k < 3; ++k) {
            if (tri[k] == be.a) la = k;
            if (tri[k] == be.b) lb = k;
          }
          if (la < 0 || lb < 0) continue;
          const Point2 ref_corners[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
          for (double s : {0.123, 0.5, 0.871}) {
            const Point2 ref{ref_corners[la].x + s * (ref_corners[lb].x - ref_corners[la].x),
                             ref_corners[la].y + s * (ref_corners[lb].y - ref_corners[la].y)};
            const auto v = evaluate(u, t, ref);
            const double trace = v[0] * be.tangent.x + v[1] * be.tangent.y;
            if (std::abs(trace) > 1e-12)
              return fail("tangential E trace " + std::to_string(trace) + " on " +
                          to_string(kind));
          }
          break;
        }
      }
    }
  }
  return {};
}

std::string mesh_nestedness() {
  for (DomainKind kind : {DomainKind::square, DomainKind::lshape, DomainKind::slit}) {
    DomainSpec spec{kind, 4};
    Mesh mesh = generate(spec);
    const double h0 = mesh.h_max;
    Mesh fine = mesh;
    for (int k = 1; k <= 3; ++k) {
      fine = refine_uniform(fine);
      if (fine.h_max != h0 * std::pow(0.5, k))
        return fail("h_max is not h0 / 2^k after " + std::to_string(k) + " refinements");
    }
    // parent vertex coordinates appear verbatim in the child
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
      if (fine.vertices[v].x != mesh.vertices[v].x ||
          fine.vertices[v].y != mesh.vertices[v].y)
        return fail("parent vertices not preserved bitwise under refinement");
    }
    if (!validate(fine).all_pass()) return fail("refined mesh fails validation");
  }
  return {};
}

std::string io_round_trips() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mxe_prop_io";
  fs::create_directories(dir);
  for (DomainKind kind : {DomainKind::square, DomainKind::slit}) {
    DomainSpec spec{kind, 4};
    const Mesh mesh = generate(spec);
    const std::string path = (dir / ("mesh_" + to_string(kind) + ".json")).string();
    write_mesh_json(mesh, path);
    const Mesh back = read_mesh_json(path);
    if (back.vertices.size() != mesh.vertices.size() ||
        back.triangles != mesh.triangles || back.region_tags != mesh.region_tags ||
        back.crack_pairs != mesh.crack_pairs)
      return fail("mesh JSON round trip lost structure on " + to_string(kind));
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
      if (back.vertices[v].x != mesh.vertices[v].x ||
          back.vertices[v].y != mesh.vertices[v].y)
        return fail("mesh JSON round trip not bit-exact on " + to_string(kind));
    // writers are pure: identical bytes on a second write
    const std::string path2 = (dir / "again.json").string();
    write_mesh_json(back, path2);
    write_mesh_json(back, (dir / "again2.json").string());
    std::ifstream f1(path2), f2((dir / "again2.json").string());
    std::stringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    if (b1.str() != b2.str()) return fail("mesh writer is not deterministic");
  }
  return {};
}

}  // namespace props
