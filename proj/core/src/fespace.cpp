// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/fespace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "mxe/quadrature.hpp"

namespace mxe {

namespace {

using Edge = std::pair<int, int>;
Edge edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Dense solve of V * X = I by Gauss elimination with partial pivoting.
std::vector<double> invert(std::vector<double> v, int n) {
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(v[row * n + col]) > std::abs(v[pivot * n + col])) pivot = row;
    if (v[pivot * n + col] == 0.0) throw std::runtime_error("singular Vandermonde matrix");
    if (pivot != col)
      for (int k = 0; k < n; ++k) {
        std::swap(v[pivot * n + k], v[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    const double d = v[col * n + col];
    for (int k = 0; k < n; ++k) {
      v[col * n + k] /= d;
      inv[col * n + k] /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const double f = v[row * n + col];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        v[row * n + k] -= f * v[col * n + k];
        inv[row * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

struct AffineMap {
  Point2 v0;
  double j00, j01, j10, j11, det;

  explicit AffineMap(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    v0 = mesh.vertices[tri[0]];
    const Point2 d1 = mesh.vertices[tri[1]] - v0;
    const Point2 d2 = mesh.vertices[tri[2]] - v0;
    j00 = d1.x;
    j10 = d1.y;
    j01 = d2.x;
    j11 = d2.y;
    det = j00 * j11 - j01 * j10;
  }

  Point2 to_physical(Point2 ref) const {
    return {v0.x + j00 * ref.x + j01 * ref.y, v0.y + j10 * ref.x + j11 * ref.y};
  }

  Point2 gradient(Point2 ref_grad) const {
    return {(j11 * ref_grad.x - j10 * ref_grad.y) / det,
            (-j01 * ref_grad.x + j00 * ref_grad.y) / det};
  }
};

}  // namespace

FESpace::FESpace(const Mesh& mesh, int order) : mesh_(&mesh), order_(order) {
  if (order < 1 || order > 5)
    throw std::invalid_argument("FESpace: order must lie in [1,5]");
  if (mesh.n_triangles() == 0) throw std::invalid_argument("FESpace: empty mesh");

  const int r = order;
  nodes_per_tri_ = (r + 1) * (r + 2) / 2;

  // Reference lattice and monomial basis.
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r - a; ++b) {
      ref_nodes_.push_back({static_cast<double>(a) / r, static_cast<double>(b) / r});
      monomials_.emplace_back(a, b);
    }
  {
    const int n = nodes_per_tri_;
    std::vector<double> vand(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        vand[i * n + j] = std::pow(ref_nodes_[i].x, monomials_[j].first) *
                          std::pow(ref_nodes_[i].y, monomials_[j].second);
    basis_coeff_ = invert(std::move(vand), n);
  }

  // Global scalar nodes: mesh vertices, then r-1 nodes per unique edge, then
  // interior nodes per triangle.  Edge-node coordinates are computed from the
  // sorted vertex pair so both incident triangles agree bitwise.
  nodes_.assign(mesh.vertices.begin(), mesh.vertices.end());
  std::map<Edge, int> edge_base;
  auto edge_node = [&](int a, int b, int step) {  // step in [1, r-1] from a to b
    const Edge key = edge_key(a, b);
    auto it = edge_base.find(key);
    if (it == edge_base.end()) {
      it = edge_base.emplace(key, static_cast<int>(nodes_.size())).first;
      const Point2 pa = mesh.vertices[key.first], pb = mesh.vertices[key.second];
      for (int s = 1; s < r; ++s) {
        const double f = static_cast<double>(s) / r;
        nodes_.push_back({pa.x + f * (pb.x - pa.x), pa.y + f * (pb.y - pa.y)});
      }
    }
    const int s = (a == key.first) ? step : r - step;
    return it->second + (s - 1);
  };

  tri_nodes_.resize(mesh.n_triangles());
  for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t) {
    const auto& tri = mesh.triangles[t];
    const AffineMap map(mesh, t);
    auto& local = tri_nodes_[t];
    local.resize(nodes_per_tri_);
    int idx = 0;
    for (int a = 0; a <= r; ++a)
      for (int b = 0; b <= r - a; ++b, ++idx) {
        const int c = r - a - b;  // barycentric weight of vertex 0
        if (c == r)
          local[idx] = tri[0];
        else if (a == r)
          local[idx] = tri[1];
        else if (b == r)
          local[idx] = tri[2];
        else if (b == 0)
          local[idx] = edge_node(tri[0], tri[1], a);
        else if (c == 0)
          local[idx] = edge_node(tri[1], tri[2], b);
        else if (a == 0)
          local[idx] = edge_node(tri[0], tri[2], b);
        else {
          local[idx] = static_cast<int>(nodes_.size());
          nodes_.push_back(map.to_physical(ref_nodes_[idx]));
        }
      }
  }

  // Tangential boundary condition: collect boundary tangents per scalar node.
  // A single tangent line drops the tangential E component; non-parallel
  // tangents (a corner) drop both.  Only axis-aligned boundaries are handled.
  std::map<int, std::vector<Point2>> tangents;
  for (const auto& be : mesh_->boundary_edges) {
    tangents[be.a].push_back(be.tangent);
    tangents[be.b].push_back(be.tangent);
    if (r > 1) {
      const Edge key = edge_key(be.a, be.b);
      const int base = edge_base.at(key);
      for (int s = 1; s < r; ++s) tangents[base + (s - 1)].push_back(be.tangent);
    }
  }

  node_dofs_.assign(nodes_.size(), {0, 0, 0});
  std::vector<std::pair<bool, bool>> drop(nodes_.size(), {false, false});
  for (const auto& [node, list] : tangents) {
    bool corner = false;
    for (std::size_t i = 1; i < list.size() && !corner; ++i)
      if (std::abs(cross(list[0], list[i])) > 1e-12) corner = true;
    bool drop_e1 = corner, drop_e2 = corner;
    if (!corner) {
      const Point2 t0 = list[0];
      if (std::abs(t0.y) <= 1e-12)
        drop_e1 = true;  // horizontal edge: tangential component is E1
      else if (std::abs(t0.x) <= 1e-12)
        drop_e2 = true;  // vertical edge: tangential component is E2
      else
        throw std::invalid_argument(
            "FESpace: non-axis-aligned boundary tangents are not supported");
    }
    drop[node] = {drop_e1, drop_e2};
    constraint_log_.push_back({node, drop_e1, drop_e2});
  }

  n_dofs_ = 0;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    node_dofs_[v][kE1] = drop[v].first ? -1 : n_dofs_++;
    node_dofs_[v][kE2] = drop[v].second ? -1 : n_dofs_++;
    node_dofs_[v][kH] = n_dofs_++;
  }
}

void FESpace::basis_values(Point2 ref, std::vector<double>& phi) const {
  const int n = nodes_per_tri_;
  phi.assign(n, 0.0);
  std::vector<double> mono(n);
  for (int j = 0; j < n; ++j)
    mono[j] = std::pow(ref.x, monomials_[j].first) * std::pow(ref.y, monomials_[j].second);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += basis_coeff_[j * n + i] * mono[j];
    phi[i] = s;
  }
}

void FESpace::basis_gradients(Point2 ref, std::vector<Point2>& grad) const {
  const int n = nodes_per_tri_;
  grad.assign(n, Point2{});
  std::vector<Point2> dmono(n);
  for (int j = 0; j < n; ++j) {
    const int a = monomials_[j].first, b = monomials_[j].second;
    dmono[j].x = a == 0 ? 0.0 : a * std::pow(ref.x, a - 1) * std::pow(ref.y, b);
    dmono[j].y = b == 0 ? 0.0 : b * std::pow(ref.x, a) * std::pow(ref.y, b - 1);
  }
  for (int i = 0; i < n; ++i) {
    Point2 g{};
    for (int j = 0; j < n; ++j) {
      g.x += basis_coeff_[j * n + i] * dmono[j].x;
      g.y += basis_coeff_[j * n + i] * dmono[j].y;
    }
    grad[i] = g;
  }
}

int FESpace::dof_count(Component c) const {
  int count = 0;
  for (const auto& d : node_dofs_)
    if (d[c] >= 0) ++count;
  return count;
}

CoefficientVector interpolate(const FESpace& space, const AnalyticField& f) {
  CoefficientVector u;
  u.space = &space;
  u.values.assign(space.n_dofs(), 0.0);
  for (int v = 0; v < space.n_scalar_nodes(); ++v) {
    const Point2 p = space.nodes()[v];
    const int de1 = space.dof(v, kE1), de2 = space.dof(v, kE2), dh = space.dof(v, kH);
    if (de1 >= 0) u.values[de1] = f.e1(p);
    if (de2 >= 0) u.values[de2] = f.e2(p);
    u.values[dh] = f.h(p);
  }
  return u;
}

std::array<double, 3> evaluate(const CoefficientVector& u, int t, Point2 ref) {
  const FESpace& space = *u.space;
  std::vector<double> phi;
  space.basis_values(ref, phi);
  std::array<double, 3> out{0.0, 0.0, 0.0};
  const auto& local = space.tri_nodes(t);
  for (int k = 0; k < space.nodes_per_tri(); ++k) {
    for (int c = 0; c < 3; ++c) {
      const int d = space.dof(local[k], static_cast<Component>(c));
      if (d >= 0) out[c] += u.values[d] * phi[k];
    }
  }
  return out;
}

std::array<double, 3> evaluate_curls(const CoefficientVector& u, int t, Point2 ref) {
  const FESpace& space = *u.space;
  std::vector<Point2> gref;
  space.basis_gradients(ref, gref);
  const AffineMap map(space.mesh(), t);
  const auto& local = space.tri_nodes(t);
  double curl_e = 0.0;
  Point2 grad_h{};
  for (int k = 0; k < space.nodes_per_tri(); ++k) {
    const Point2 g = map.gradient(gref[k]);
    const int d1 = space.dof(local[k], kE1);
    const int d2 = space.dof(local[k], kE2);
    const int dh = space.dof(local[k], kH);
    if (d1 >= 0) curl_e -= u.values[d1] * g.y;
    if (d2 >= 0) curl_e += u.values[d2] * g.x;
    grad_h.x += u.values[dh] * g.x;
    grad_h.y += u.values[dh] * g.y;
  }
  return {curl_e, grad_h.y, -grad_h.x};  // (curl E, curl H)
}

namespace {

struct CurlProducts {
  std::vector<double> gram;   // k x k
  std::vector<double> rhs;    // k
  double uu = 0.0;
};

CurlProducts curl_products(const FESpace& space, const CoefficientVector& u,
                           const std::vector<AnalyticField>& fields) {
  const int k = static_cast<int>(fields.size());
  CurlProducts acc;
  acc.gram.assign(k * k, 0.0);
  acc.rhs.assign(k, 0.0);
  const TriangleRule& rule = triangle_quadrature(12);
  std::vector<double> fe1(k), fe2(k), fh(k), fce(k);
  std::vector<Point2> fch(k);
  for (int t = 0; t < static_cast<int>(space.mesh().n_triangles()); ++t) {
    const AffineMap map(space.mesh(), t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point2 ref{rule.x[q], rule.y[q]};
      const Point2 phys = map.to_physical(ref);
      const double w = rule.w[q] * std::abs(map.det);
      const auto uv = evaluate(u, t, ref);
      const auto uc = evaluate_curls(u, t, ref);
      for (int i = 0; i < k; ++i) {
        fe1[i] = fields[i].e1(phys);
        fe2[i] = fields[i].e2(phys);
        fh[i] = fields[i].h(phys);
        fce[i] = fields[i].curl_e(phys);
        fch[i] = fields[i].curl_h(phys);
      }
      acc.uu += w * (uv[0] * uv[0] + uv[1] * uv[1] + uv[2] * uv[2] + uc[0] * uc[0] +
                     uc[1] * uc[1] + uc[2] * uc[2]);
      for (int i = 0; i < k; ++i) {
        acc.rhs[i] += w * (uv[0] * fe1[i] + uv[1] * fe2[i] + uv[2] * fh[i] +
                           uc[0] * fce[i] + uc[1] * fch[i].x + uc[2] * fch[i].y);
        for (int j = 0; j < k; ++j)
          acc.gram[i * k + j] +=
              w * (fe1[i] * fe1[j] + fe2[i] * fe2[j] + fh[i] * fh[j] + fce[i] * fce[j] +
                   fch[i].x * fch[j].x + fch[i].y * fch[j].y);
      }
    }
  }
  return acc;
}

}  // namespace

double hcurl_distance(const FESpace& space, const CoefficientVector& u,
                      const std::vector<AnalyticField>& reference_fields) {
  if (reference_fields.empty())
    throw std::invalid_argument("hcurl_distance: empty reference list");
  const int k = static_cast<int>(reference_fields.size());
  CurlProducts p = curl_products(space, u, reference_fields);

  // Solve G c = rhs; distance^2 = ||u||^2 - rhs . c.
  std::vector<double> g = p.gram, c = p.rhs;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int row = col + 1; row < k; ++row)
      if (std::abs(g[row * k + col]) > std::abs(g[pivot * k + col])) pivot = row;
    if (g[pivot * k + col] == 0.0)
      throw std::invalid_argument("hcurl_distance: reference fields are linearly dependent");
    if (pivot != col) {
      for (int j = 0; j < k; ++j) std::swap(g[pivot * k + j], g[col * k + j]);
      std::swap(c[pivot], c[col]);
    }
    for (int row = col + 1; row < k; ++row) {
      const double f = g[row * k + col] / g[col * k + col];
      for (int j = col; j < k; ++j) g[row * k + j] -= f * g[col * k + j];
      c[row] -= f * c[col];
    }
  }
  for (int row = k - 1; row >= 0; --row) {
    for (int j = row + 1; j < k; ++j) c[row] -= g[row * k + j] * c[j];
    c[row] /= g[row * k + row];
  }
  double proj = 0.0;
  for (int i = 0; i < k; ++i) proj += p.rhs[i] * c[i];
  return std::sqrt(std::max(0.0, p.uu - proj));
}

double hcurl_norm(const FESpace& space, const CoefficientVector& u) {
  const TriangleRule& rule = triangle_quadrature(12);
  double acc = 0.0;
  for (int t = 0; t < static_cast<int>(space.mesh().n_triangles()); ++t) {
    const AffineMap map(space.mesh(), t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point2 ref{rule.x[q], rule.y[q]};
      const double w = rule.w[q] * std::abs(map.det);
      const auto v = evaluate(u, t, ref);
      const auto c = evaluate_curls(u, t, ref);
      acc += w * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + c[0] * c[0] + c[1] * c[1] +
                  c[2] * c[2]);
    }
  }
  return std::sqrt(acc);
}

double l2_norm(const FESpace& space, const CoefficientVector& u) {
  const TriangleRule& rule = triangle_quadrature(12);
  double acc = 0.0;
  for (int t = 0; t < static_cast<int>(space.mesh().n_triangles()); ++t) {
    const AffineMap map(space.mesh(), t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point2 ref{rule.x[q], rule.y[q]};
      const double w = rule.w[q] * std::abs(map.det);
      const auto v = evaluate(u, t, ref);
      acc += w * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    }
  }
  return std::sqrt(acc);
}

}  // namespace mxe
