// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mxe/quadrature.hpp"
#include "mxe/runtime.hpp"

namespace mxe {

DenseMatrix SymMatrix::to_dense() const {
  const int size = n();
  DenseMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int k = pattern->row_ptr[i]; k < pattern->row_ptr[i + 1]; ++k) {
      const int j = pattern->col[k];
      m(i, j) = val[k];
      m(j, i) = val[k];
    }
  return m;
}

void SymMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
  const int size = n();
  y.assign(size, 0.0);
  for (int i = 0; i < size; ++i)
    for (int k = pattern->row_ptr[i]; k < pattern->row_ptr[i + 1]; ++k) {
      const int j = pattern->col[k];
      y[i] += val[k] * x[j];
      if (j != i) y[j] += val[k] * x[i];
    }
}

double SymMatrix::quadratic_form(const std::vector<double>& x) const {
  std::vector<double> y;
  multiply(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < n(); ++i)
    for (int k = pattern->row_ptr[i]; k < pattern->row_ptr[i + 1]; ++k) {
      const double v = val[k] * val[k];
      s += pattern->col[k] == i ? v : 2.0 * v;
    }
  return std::sqrt(s);
}

MaterialCoefficients MaterialCoefficients::uniform(double eps_value, double mu_value) {
  MaterialCoefficients mat;
  for (int tag = 1; tag <= 4; ++tag) {
    mat.eps[tag] = eps_value;
    mat.mu[tag] = mu_value;
  }
  return mat;
}

MaterialCoefficients MaterialCoefficients::transmission_quadrants() {
  MaterialCoefficients mat = uniform(1.0, 1.0);
  mat.eps[3] = 0.5;
  mat.eps[4] = 0.5;
  return mat;
}

double MaterialCoefficients::eps_of(int tag) const {
  auto it = eps.find(tag);
  if (it == eps.end())
    throw std::invalid_argument("missing eps for region tag " + std::to_string(tag));
  return it->second;
}

double MaterialCoefficients::mu_of(int tag) const {
  auto it = mu.find(tag);
  if (it == mu.end())
    throw std::invalid_argument("missing mu for region tag " + std::to_string(tag));
  return it->second;
}

namespace {

struct AffineMap {
  double j00, j01, j10, j11, det;

  AffineMap(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const Point2 v0 = mesh.vertices[tri[0]];
    const Point2 d1 = mesh.vertices[tri[1]] - v0;
    const Point2 d2 = mesh.vertices[tri[2]] - v0;
    j00 = d1.x;
    j10 = d1.y;
    j01 = d2.x;
    j11 = d2.y;
    det = j00 * j11 - j01 * j10;
  }

  Point2 gradient(Point2 g) const {
    return {(j11 * g.x - j10 * g.y) / det, (-j01 * g.x + j00 * g.y) / det};
  }
};

// Local dof layout: scalar node k carries (E1, E2, H) at 3k, 3k+1, 3k+2.
struct ElementMatrices {
  std::vector<double> a, b, c;  // dense (3 nloc)^2, row-major
};

void element_forms(const FESpace& space, const Mesh& mesh, int t, double eps, double mu,
                   const TriangleRule& rule,
                   const std::vector<std::vector<double>>& phi_q,
                   const std::vector<std::vector<Point2>>& grad_q, ElementMatrices& out) {
  const int nloc = space.nodes_per_tri();
  const int dim = 3 * nloc;
  out.a.assign(std::size_t(dim) * dim, 0.0);
  out.b.assign(std::size_t(dim) * dim, 0.0);
  out.c.assign(std::size_t(dim) * dim, 0.0);
  const AffineMap map(mesh, t);
  std::vector<Point2> g(nloc);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double w = rule.w[q] * std::abs(map.det);
    const auto& phi = phi_q[q];
    for (int k = 0; k < nloc; ++k) g[k] = map.gradient(grad_q[q][k]);
    for (int k = 0; k < nloc; ++k) {
      for (int l = 0; l < nloc; ++l) {
        const double mass = phi[k] * phi[l];
        // b: weighted mass, diagonal in the components
        out.b[(3 * k + kE1) * dim + (3 * l + kE1)] += w * eps * mass;
        out.b[(3 * k + kE2) * dim + (3 * l + kE2)] += w * eps * mass;
        out.b[(3 * k + kH) * dim + (3 * l + kH)] += w * mu * mass;
        // a: mixed curl, couples E and H; integrand symmetrised via the
        // boundary condition so the element matrix is symmetric exactly.
        out.a[(3 * k + kH) * dim + (3 * l + kE1)] += w * (-g[l].y) * phi[k];
        out.a[(3 * k + kE1) * dim + (3 * l + kH)] += w * (-g[k].y) * phi[l];
        out.a[(3 * k + kH) * dim + (3 * l + kE2)] += w * g[l].x * phi[k];
        out.a[(3 * k + kE2) * dim + (3 * l + kH)] += w * g[k].x * phi[l];
        // c: curl-curl; curl(E1) = -dy, curl(E2) = dx, |curl H|^2 = |grad H|^2
        out.c[(3 * k + kE1) * dim + (3 * l + kE1)] += w / mu * g[k].y * g[l].y;
        out.c[(3 * k + kE1) * dim + (3 * l + kE2)] += w / mu * (-g[k].y) * g[l].x;
        out.c[(3 * k + kE2) * dim + (3 * l + kE1)] += w / mu * g[k].x * (-g[l].y);
        out.c[(3 * k + kE2) * dim + (3 * l + kE2)] += w / mu * g[k].x * g[l].x;
        out.c[(3 * k + kH) * dim + (3 * l + kH)] +=
            w / eps * (g[k].x * g[l].x + g[k].y * g[l].y);
      }
    }
  }
}

}  // namespace

FormMatrices assemble(const FESpace& space, const MaterialCoefficients& mat) {
  const Mesh& mesh = space.mesh();
  const int n = space.n_dofs();
  const int nloc = space.nodes_per_tri();
  const int nt = static_cast<int>(mesh.n_triangles());

  for (int t = 0; t < nt; ++t) {
    const int tag = mesh.region_tags[t];
    const double eps = mat.eps_of(tag), mu = mat.mu_of(tag);
    if (!(eps > 0.0) || !std::isfinite(eps) || !(mu > 0.0) || !std::isfinite(mu))
      throw std::invalid_argument("coefficients must be strictly positive and finite");
  }

  // Per-triangle global dofs, -1 for eliminated entries.
  std::vector<std::vector<int>> gdofs(nt);
  for (int t = 0; t < nt; ++t) {
    gdofs[t].resize(3 * nloc);
    const auto& local = space.tri_nodes(t);
    for (int k = 0; k < nloc; ++k)
      for (int c = 0; c < 3; ++c)
        gdofs[t][3 * k + c] = space.dof(local[k], static_cast<Component>(c));
  }

  FormMatrices fm;
  fm.space = &space;
  fm.pattern.n = n;
  {
    std::vector<std::vector<int>> cols(n);
    for (int t = 0; t < nt; ++t)
      for (int p : gdofs[t]) {
        if (p < 0) continue;
        for (int q : gdofs[t])
          if (q >= p) cols[p].push_back(q);
      }
    fm.pattern.row_ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      auto& ci = cols[i];
      std::sort(ci.begin(), ci.end());
      ci.erase(std::unique(ci.begin(), ci.end()), ci.end());
      fm.pattern.row_ptr[i + 1] = fm.pattern.row_ptr[i] + static_cast<int>(ci.size());
      fm.pattern.col.insert(fm.pattern.col.end(), ci.begin(), ci.end());
    }
  }
  const std::size_t nnz = fm.pattern.nnz();
  fm.a.assign(nnz, 0.0);
  fm.b.assign(nnz, 0.0);
  fm.c.assign(nnz, 0.0);

  // Basis tables at the quadrature points of the reference triangle.
  const TriangleRule& rule = triangle_quadrature(std::min(12, 2 * space.order()));
  std::vector<std::vector<double>> phi_q(rule.size());
  std::vector<std::vector<Point2>> grad_q(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    space.basis_values({rule.x[q], rule.y[q]}, phi_q[q]);
    space.basis_gradients({rule.x[q], rule.y[q]}, grad_q[q]);
  }

  auto entry_index = [&](int i, int j) {
    const int lo = fm.pattern.row_ptr[i], hi = fm.pattern.row_ptr[i + 1];
    const auto it = std::lower_bound(fm.pattern.col.begin() + lo, fm.pattern.col.begin() + hi, j);
    return static_cast<int>(it - fm.pattern.col.begin());
  };

  // Element matrices are computed in parallel per chunk, then accumulated
  // sequentially in triangle order so the result is identical for any thread
  // count.
  const int n_threads = std::max(1, thread_count());
  const int chunk = std::max(64, n_threads * 16);
  std::vector<ElementMatrices> buffer(chunk);
  const int dim = 3 * nloc;
  for (int begin = 0; begin < nt; begin += chunk) {
    const int end = std::min(nt, begin + chunk);
    auto worker = [&](int first, int last) {
      for (int t = first; t < last; ++t) {
        const int tag = mesh.region_tags[t];
        element_forms(space, mesh, t, mat.eps_of(tag), mat.mu_of(tag), rule, phi_q, grad_q,
                      buffer[t - begin]);
      }
    };
    if (n_threads == 1 || end - begin < 2 * n_threads) {
      worker(begin, end);
    } else {
      std::vector<std::thread> pool;
      const int per = (end - begin + n_threads - 1) / n_threads;
      for (int w = 0; w < n_threads; ++w) {
        const int first = begin + w * per;
        const int last = std::min(end, first + per);
        if (first < last) pool.emplace_back(worker, first, last);
      }
      for (auto& th : pool) th.join();
    }
    for (int t = begin; t < end; ++t) {
      const auto& em = buffer[t - begin];
      const auto& gd = gdofs[t];
      for (int p = 0; p < dim; ++p) {
        const int gp = gd[p];
        if (gp < 0) continue;
        for (int q = 0; q < dim; ++q) {
          const int gq = gd[q];
          if (gq < gp) continue;
          const int idx = entry_index(gp, gq);
          fm.a[idx] += em.a[std::size_t(p) * dim + q];
          fm.b[idx] += em.b[std::size_t(p) * dim + q];
          fm.c[idx] += em.c[std::size_t(p) * dim + q];
        }
      }
    }
  }
  return fm;
}

Pencil build_pencil(const FormMatrices& fm, double t) {
  Pencil p;
  p.forms = &fm;
  p.t = t;
  p.pattern = fm.pattern;
  const std::size_t nnz = fm.pattern.nnz();
  p.l.resize(nnz);
  p.r.resize(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    p.l[k] = fm.a[k] - t * fm.b[k];
    p.r[k] = fm.c[k] - 2.0 * t * fm.a[k] + t * t * fm.b[k];
  }
  return p;
}

double shifted_residual_norm2(const FESpace& space, const MaterialCoefficients& mat,
                              const std::vector<double>& x, double t) {
  const Mesh& mesh = space.mesh();
  CoefficientVector u{&space, x};
  const TriangleRule& rule = triangle_quadrature(std::min(12, 2 * space.order()));
  double acc = 0.0;
  for (int tri = 0; tri < static_cast<int>(mesh.n_triangles()); ++tri) {
    const int tag = mesh.region_tags[tri];
    const double eps = mat.eps_of(tag), mu = mat.mu_of(tag);
    const double se = std::sqrt(eps), sm = std::sqrt(mu);
    const AffineMap map(mesh, tri);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point2 ref{rule.x[q], rule.y[q]};
      const double w = rule.w[q] * std::abs(map.det);
      const auto v = evaluate(u, tri, ref);
      const auto c = evaluate_curls(u, tri, ref);
      const double re1 = c[1] / se - t * se * v[0];
      const double re2 = c[2] / se - t * se * v[1];
      const double rh = c[0] / sm - t * sm * v[2];
      acc += w * (re1 * re1 + re2 * re2 + rh * rh);
    }
  }
  return acc;
}

}  // namespace mxe
