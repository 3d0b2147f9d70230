// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mxe {

struct Point2 {
  double x = 0.0, y = 0.0;
};

inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);

/// Boundary tags used by the built-in domains.
enum BoundaryTag : int {
  kBoundaryOuter = 1,
  kBoundarySlitUpper = 2,
  kBoundarySlitLower = 3,
};

struct BoundaryEdge {
  int a = -1, b = -1;   ///< vertex indices, ordered so the domain lies on the left
  Point2 tangent;       ///< unit tangent (b - a) / |b - a|
  int tag = kBoundaryOuter;
};

/// Conforming triangulation with boundary-edge tags, per-triangle region tags
/// and crack (duplicated-node) support for slit domains.  Geometrically
/// coincident crack twins are topologically distinct vertices; fields built on
/// the mesh may therefore jump across the slit.
///
/// Meshes are immutable after construction; refinement returns a new mesh.
struct Mesh {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;  ///< counterclockwise
  std::vector<BoundaryEdge> boundary_edges;
  std::vector<int> region_tags;               ///< one tag per triangle
  std::vector<std::pair<int, int>> crack_pairs;
  double h_max = 0.0;                          ///< max over triangles of the longest edge

  std::size_t n_vertices() const { return vertices.size(); }
  std::size_t n_triangles() const { return triangles.size(); }

  double triangle_area(int t) const;      ///< signed; positive for CCW
  double triangle_diameter(int t) const;  ///< longest edge
  double triangle_min_angle(int t) const; ///< radians
  double min_angle() const;
  double compute_h_max() const;
};

enum class DomainKind { square, lshape, slit, square4 };

std::string to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

struct Grading {
  Point2 point;
  double rf = 1.0;  ///< local size factor relative to the far field, in (0,1]
};

/// Recipe for one of the benchmark domains on (0,pi)^2.
///   square  - the full square
///   lshape  - (0,pi)^2 minus the closed quadrant [0,pi/2]^2
///   slit    - (0,pi)^2 cut along S = [pi/2,pi] x {pi/2} (crack mesh)
///   square4 - full square split into four material quadrants, tags 1..4
struct DomainSpec {
  DomainKind kind = DomainKind::square;
  int n = 4;  ///< base subdivision count per side; must be even except for square
  std::optional<Grading> grading;
  double jitter = 0.0;    ///< interior-node jitter amplitude as a fraction of the cell size
  std::uint64_t seed = 0; ///< RNG seed for jitter
};

/// Builds the base mesh for `spec`, applying grading when requested.
/// Throws std::invalid_argument on bad parameters (n = 0, rf outside (0,1],
/// odd n for domains that need the midlines as grid lines).
Mesh generate(const DomainSpec& spec);

/// Red refinement: every triangle is split into four congruent children.
/// Parent vertices are kept verbatim (nested spaces) and h_max halves exactly.
Mesh refine_uniform(const Mesh& mesh);

/// Grades the mesh toward `point`: elements near the point end up with
/// diameter ~ rf times the far-field size.  Runs ceil(log2(1/rf)) passes of
/// red refinement on the elements touching a shrinking ball around the point,
/// with green closures to restore conformity.
Mesh refine_toward(const Mesh& mesh, Point2 point, double rf);

struct MeshCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct MeshDiagnostics {
  std::vector<MeshCheck> checks;
  double min_angle_deg = 0.0;
  double h_max = 0.0;
  std::size_t n_vertices = 0, n_triangles = 0, n_boundary_edges = 0, n_crack_pairs = 0;
  bool all_pass() const;
  std::string summary() const;
};

/// Checks every Mesh invariant (positive areas, conformity, boundary-edge
/// incidence, h_max consistency, min-angle floor, crack integrity).
/// Failures are reported, not thrown.
MeshDiagnostics validate(const Mesh& mesh, double min_angle_floor_deg = 15.0);

}  // namespace mxe
