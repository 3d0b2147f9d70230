// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mxe/mesh.hpp"

namespace mxe {

/// Field components of the unknown (E1, E2, H).
enum Component : int { kE1 = 0, kE2 = 1, kH = 2 };

/// A 3-component analytic field with element-wise curls, used for
/// interpolation, eigenspace distances and field export.
///   curl E = dx E2 - dy E1 (scalar),  curl H = (dy H, -dx H) (vector).
struct AnalyticField {
  std::function<double(Point2)> e1, e2, h;
  std::function<double(Point2)> curl_e;            // scalar curl of (e1,e2)
  std::function<Point2(Point2)> curl_h;            // vector curl of h
};

struct ConstraintRecord {
  int node = -1;
  bool drop_e1 = false, drop_e2 = false;
};

/// Continuous Lagrange P_r space for the 3-component field on a Mesh, with the
/// tangential boundary condition E.t = 0 folded into the DOF map.  Boundary
/// nodes lose the tangential E component; corner nodes (two non-parallel
/// boundary tangents) lose both.  H is never constrained.  Crack twins carry
/// independent DOFs for all three components.
///
/// All benchmark domains have axis-aligned boundaries, which is the only case
/// the constraint builder accepts.
class FESpace {
 public:
  FESpace(const Mesh& mesh, int order);

  const Mesh& mesh() const { return *mesh_; }
  int order() const { return order_; }
  int n_dofs() const { return n_dofs_; }
  int n_scalar_nodes() const { return static_cast<int>(nodes_.size()); }
  int nodes_per_tri() const { return nodes_per_tri_; }

  const std::vector<Point2>& nodes() const { return nodes_; }
  /// Scalar node indices of triangle t, in reference lattice order.
  const std::vector<int>& tri_nodes(int t) const { return tri_nodes_[t]; }
  /// Global DOF of (scalar node, component); -1 when eliminated by the BC.
  int dof(int node, Component c) const { return node_dofs_[node][c]; }
  const std::vector<ConstraintRecord>& constraint_log() const { return constraint_log_; }

  /// Reference lattice coordinates of the local scalar nodes.
  const std::vector<Point2>& reference_nodes() const { return ref_nodes_; }
  /// Lagrange basis values at a reference point, one per local node.
  void basis_values(Point2 ref, std::vector<double>& phi) const;
  /// Reference-coordinate gradients of the basis at a reference point.
  void basis_gradients(Point2 ref, std::vector<Point2>& grad) const;

  int dof_count(Component c) const;

 private:
  const Mesh* mesh_;
  int order_;
  int nodes_per_tri_;
  std::vector<Point2> nodes_;
  std::vector<std::vector<int>> tri_nodes_;
  std::vector<std::array<int, 3>> node_dofs_;
  int n_dofs_ = 0;
  std::vector<ConstraintRecord> constraint_log_;

  std::vector<Point2> ref_nodes_;
  std::vector<double> basis_coeff_;  // monomial coefficients, column per basis function
  std::vector<std::pair<int, int>> monomials_;
};

struct CoefficientVector {
  const FESpace* space = nullptr;
  std::vector<double> values;
};

/// Nodal interpolation; constrained DOFs receive the part of f consistent with
/// the constraint (the tangential component is dropped).
CoefficientVector interpolate(const FESpace& space, const AnalyticField& f);

/// Value of the discrete field at a reference point of triangle t.
std::array<double, 3> evaluate(const CoefficientVector& u, int t, Point2 ref);

/// (curl E, curl_x H, curl_y H) of the discrete field at a reference point.
std::array<double, 3> evaluate_curls(const CoefficientVector& u, int t, Point2 ref);

/// Curl-norm distance from u to the span of the given analytic fields,
/// minimised by least squares in the curl inner product.
/// ||v||^2 = ||v||_0^2 + ||curl v||_0^2, evaluated by quadrature.
double hcurl_distance(const FESpace& space, const CoefficientVector& u,
                      const std::vector<AnalyticField>& reference_fields);

/// Curl-norm of the discrete field (same quadrature as hcurl_distance).
double hcurl_norm(const FESpace& space, const CoefficientVector& u);

/// L2 norm of the discrete field.
double l2_norm(const FESpace& space, const CoefficientVector& u);

}  // namespace mxe
