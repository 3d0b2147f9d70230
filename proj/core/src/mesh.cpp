// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mxe {

namespace {

constexpr double kPi = M_PI;
constexpr double kHalfPi = M_PI / 2.0;

using Edge = std::pair<int, int>;

Edge edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double s = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const Point2 q{a.x + s * ab.x, a.y + s * ab.y};
  return norm(p - q);
}

double point_triangle_distance(const Mesh& mesh, int t, Point2 p) {
  const auto& tri = mesh.triangles[t];
  const Point2 a = mesh.vertices[tri[0]];
  const Point2 b = mesh.vertices[tri[1]];
  const Point2 c = mesh.vertices[tri[2]];
  const double s1 = cross(b - a, p - a);
  const double s2 = cross(c - b, p - b);
  const double s3 = cross(a - c, p - c);
  if (s1 >= 0.0 && s2 >= 0.0 && s3 >= 0.0) return 0.0;
  return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                   point_segment_distance(p, c, a)});
}

// Topological boundary: edges incident to exactly one triangle, ordered as in
// the owning triangle (counterclockwise traversal leaves the domain on the left).
struct BoundaryScan {
  std::vector<std::array<int, 3>> owner;  // (a, b, triangle)
};

BoundaryScan scan_boundary(const Mesh& mesh) {
  std::map<Edge, std::pair<int, int>> count;  // edge -> (incidence, first triangle)
  for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3; ++e) {
      const Edge key = edge_key(tri[e], tri[(e + 1) % 3]);
      auto it = count.find(key);
      if (it == count.end())
        count.emplace(key, std::make_pair(1, t));
      else
        it->second.first += 1;
    }
  }
  BoundaryScan scan;
  for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e], b = tri[(e + 1) % 3];
      const auto& entry = count.at(edge_key(a, b));
      if (entry.first == 1) scan.owner.push_back({a, b, t});
    }
  }
  return scan;
}

void finalize_boundary(Mesh& mesh,
                       const std::function<int(const Mesh&, int, int, int)>& tag_of) {
  mesh.boundary_edges.clear();
  for (const auto& [a, b, t] : scan_boundary(mesh).owner) {
    BoundaryEdge be;
    be.a = a;
    be.b = b;
    const Point2 d = mesh.vertices[b] - mesh.vertices[a];
    const double len = norm(d);
    be.tangent = {d.x / len, d.y / len};
    be.tag = tag_of(mesh, a, b, t);
    mesh.boundary_edges.push_back(be);
  }
}

bool on_crack_line(const DomainSpec& spec, Point2 p) {
  if (spec.kind != DomainKind::slit) return false;
  return p.y == kHalfPi && p.x >= kHalfPi;
}

bool on_material_interface(const DomainSpec& spec, Point2 p) {
  if (spec.kind != DomainKind::square4) return false;
  return p.x == kHalfPi || p.y == kHalfPi;
}

int generation_tag(const DomainSpec& spec, const Mesh& mesh, int a, int b, int tri) {
  if (spec.kind != DomainKind::slit) return kBoundaryOuter;
  const Point2 pa = mesh.vertices[a], pb = mesh.vertices[b];
  const bool on_slit = pa.y == kHalfPi && pb.y == kHalfPi && pa.x >= kHalfPi && pb.x >= kHalfPi;
  if (!on_slit) return kBoundaryOuter;
  const auto& t = mesh.triangles[tri];
  const double cy =
      (mesh.vertices[t[0]].y + mesh.vertices[t[1]].y + mesh.vertices[t[2]].y) / 3.0;
  return cy > kHalfPi ? kBoundarySlitUpper : kBoundarySlitLower;
}

}  // namespace

double norm(Point2 a) { return std::hypot(a.x, a.y); }

double Mesh::triangle_area(int t) const {
  const auto& tri = triangles[t];
  const Point2 a = vertices[tri[0]], b = vertices[tri[1]], c = vertices[tri[2]];
  return 0.5 * cross(b - a, c - a);
}

double Mesh::triangle_diameter(int t) const {
  const auto& tri = triangles[t];
  const Point2 a = vertices[tri[0]], b = vertices[tri[1]], c = vertices[tri[2]];
  return std::max({norm(b - a), norm(c - b), norm(a - c)});
}

double Mesh::triangle_min_angle(int t) const {
  const auto& tri = triangles[t];
  double best = std::numeric_limits<double>::max();
  for (int k = 0; k < 3; ++k) {
    const Point2 p = vertices[tri[k]];
    const Point2 u = vertices[tri[(k + 1) % 3]] - p;
    const Point2 v = vertices[tri[(k + 2) % 3]] - p;
    best = std::min(best, std::atan2(std::abs(cross(u, v)), dot(u, v)));
  }
  return best;
}

double Mesh::min_angle() const {
  double best = std::numeric_limits<double>::max();
  for (int t = 0; t < static_cast<int>(n_triangles()); ++t)
    best = std::min(best, triangle_min_angle(t));
  return best;
}

double Mesh::compute_h_max() const {
  double h = 0.0;
  for (int t = 0; t < static_cast<int>(n_triangles()); ++t)
    h = std::max(h, triangle_diameter(t));
  return h;
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::square: return "square";
    case DomainKind::lshape: return "lshape";
    case DomainKind::slit: return "slit";
    case DomainKind::square4: return "square4";
  }
  return "?";
}

DomainKind domain_kind_from_string(const std::string& name) {
  if (name == "square") return DomainKind::square;
  if (name == "lshape") return DomainKind::lshape;
  if (name == "slit") return DomainKind::slit;
  if (name == "square4") return DomainKind::square4;
  throw std::invalid_argument("unknown domain '" + name + "'");
}

Mesh generate(const DomainSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (spec.grading && (spec.grading->rf <= 0.0 || spec.grading->rf > 1.0))
    throw std::invalid_argument("generate: grading factor must lie in (0,1]");
  if (spec.jitter < 0.0 || spec.jitter > 0.3)
    throw std::invalid_argument("generate: jitter must lie in [0,0.3]");
  const bool needs_midline = spec.kind != DomainKind::square;
  if (needs_midline && spec.n % 2 != 0)
    throw std::invalid_argument("generate: " + to_string(spec.kind) +
                                " requires an even subdivision count n");

  const int n = spec.n;
  const int m = n / 2;
  auto coord = [&](int i) -> double {
    if (i == 0) return 0.0;
    if (2 * i == n) return kHalfPi;  // keep the midline exact for cuts/interfaces
    if (i == n) return kPi;
    return (kPi * i) / n;
  };

  Mesh mesh;
  std::vector<int> grid((n + 1) * (n + 1), -1);
  auto grid_id = [&](int i, int j) -> int& { return grid[j * (n + 1) + i]; };

  auto cell_in_domain = [&](int i, int j) {
    if (spec.kind == DomainKind::lshape) return !(i < m && j < m);
    return true;
  };

  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      bool used = false;
      for (int dj = -1; dj <= 0 && !used; ++dj)
        for (int di = -1; di <= 0 && !used; ++di) {
          const int ci = i + di, cj = j + dj;
          if (ci >= 0 && ci < n && cj >= 0 && cj < n && cell_in_domain(ci, cj)) used = true;
        }
      if (used) {
        grid_id(i, j) = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back({coord(i), coord(j)});
      }
    }

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!cell_in_domain(i, j)) continue;
      const int v00 = grid_id(i, j), v10 = grid_id(i + 1, j);
      const int v01 = grid_id(i, j + 1), v11 = grid_id(i + 1, j + 1);
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }

  // Region tags: quadrants 1..4 for the transmission layout, 1 otherwise.
  mesh.region_tags.assign(mesh.n_triangles(), 1);
  if (spec.kind == DomainKind::square4) {
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
      const auto& tri = mesh.triangles[t];
      const double cx =
          (mesh.vertices[tri[0]].x + mesh.vertices[tri[1]].x + mesh.vertices[tri[2]].x) / 3.0;
      const double cy =
          (mesh.vertices[tri[0]].y + mesh.vertices[tri[1]].y + mesh.vertices[tri[2]].y) / 3.0;
      int tag;
      if (cx < kHalfPi)
        tag = cy < kHalfPi ? 1 : 4;
      else
        tag = cy < kHalfPi ? 3 : 2;
      mesh.region_tags[t] = tag;
    }
  }

  // Cut the slit: duplicate every node on ]pi/2, pi] x {pi/2}.  The tip
  // (pi/2, pi/2) stays single; the mouth on the outer boundary is duplicated so
  // the two faces stay disconnected all the way to x = pi.
  if (spec.kind == DomainKind::slit) {
    std::map<int, int> twin;  // lower (original) -> upper copy
    for (int i = m + 1; i <= n; ++i) {
      const int orig = grid_id(i, m);
      const int copy = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(mesh.vertices[orig]);
      twin[orig] = copy;
      mesh.crack_pairs.emplace_back(orig, copy);
    }
    for (auto& tri : mesh.triangles) {
      const double cy =
          (mesh.vertices[tri[0]].y + mesh.vertices[tri[1]].y + mesh.vertices[tri[2]].y) / 3.0;
      if (cy <= kHalfPi) continue;
      for (int& v : tri) {
        auto it = twin.find(v);
        if (it != twin.end()) v = it->second;
      }
    }
  }

  // Optional seeded jitter of interior nodes, emulating unstructured meshes.
  if (spec.jitter > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const double cell = kPi / n;
    std::set<int> frozen;
    for (const auto& [a, b, t] : scan_boundary(mesh).owner) {
      (void)t;
      frozen.insert(a);
      frozen.insert(b);
    }
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
      const Point2 p = mesh.vertices[v];
      const double dx = uni(rng) * spec.jitter * cell;
      const double dy = uni(rng) * spec.jitter * cell;
      if (frozen.count(static_cast<int>(v))) continue;
      if (on_crack_line(spec, p) || on_material_interface(spec, p)) continue;
      mesh.vertices[v] = {p.x + dx, p.y + dy};
    }
  }

  mesh.h_max = mesh.compute_h_max();
  finalize_boundary(mesh, [&spec](const Mesh& msh, int a, int b, int t) {
    return generation_tag(spec, msh, a, b, t);
  });

  if (spec.jitter > 0.0 && !validate(mesh).all_pass())
    throw std::invalid_argument("generate: jitter " + std::to_string(spec.jitter) +
                                " produced an invalid mesh; lower the amplitude");

  if (spec.grading && spec.grading->rf < 1.0)
    return refine_toward(mesh, spec.grading->point, spec.grading->rf);
  return mesh;
}

namespace {

struct Refiner {
  const Mesh& parent;
  Mesh child;
  std::map<Edge, int> midpoint;
  std::map<int, int> twin;  // symmetric crack lookup over parent vertices

  explicit Refiner(const Mesh& mesh) : parent(mesh) {
    child.vertices = mesh.vertices;  // nested: parent vertices kept verbatim
    for (const auto& [a, b] : mesh.crack_pairs) {
      twin[a] = b;
      twin[b] = a;
    }
  }

  int midpoint_of(int a, int b) {
    const Edge key = edge_key(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const Point2 pa = parent.vertices[a], pb = parent.vertices[b];
    const int id = static_cast<int>(child.vertices.size());
    child.vertices.push_back({0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)});
    midpoint.emplace(key, id);
    return id;
  }

  void red(int t) {
    const auto& tri = parent.triangles[t];
    const int m01 = midpoint_of(tri[0], tri[1]);
    const int m12 = midpoint_of(tri[1], tri[2]);
    const int m02 = midpoint_of(tri[0], tri[2]);
    push(t, {tri[0], m01, m02});
    push(t, {m01, tri[1], m12});
    push(t, {m02, m12, tri[2]});
    push(t, {m01, m12, m02});
  }

  // Bisects the edge (local k, k+1); returns indices of the two children.
  std::pair<int, int> green(int t, int k) {
    const auto& tri = parent.triangles[t];
    const int a = tri[k], b = tri[(k + 1) % 3], c = tri[(k + 2) % 3];
    const int mid = midpoint_of(a, b);
    const int first = static_cast<int>(child.triangles.size());
    push(t, {a, mid, c});
    push(t, {mid, b, c});
    return {first, first + 1};
  }

  void keep(int t) { push(t, parent.triangles[t]); }

  void push(int parent_tri, std::array<int, 3> tri) {
    child.triangles.push_back(tri);
    child.region_tags.push_back(parent.region_tags[parent_tri]);
  }

  // Crack bookkeeping: a midpoint on one face pairs with the midpoint of the
  // twinned edge on the other face.  Vertices without a twin (the slit tip,
  // say) act as their own twin.
  void finish_cracks() {
    child.crack_pairs = parent.crack_pairs;
    auto twin_or_self = [&](int v) {
      auto it = twin.find(v);
      return it == twin.end() ? v : it->second;
    };
    for (const auto& [key, mid] : midpoint) {
      const Edge other = edge_key(twin_or_self(key.first), twin_or_self(key.second));
      if (other == key) continue;
      auto it = midpoint.find(other);
      if (it != midpoint.end() && mid < it->second)
        child.crack_pairs.emplace_back(mid, it->second);
    }
  }

  // Boundary tags are inherited: a child edge keeps the tag of the parent
  // boundary edge it lies on.
  void finish_boundary() {
    std::map<Edge, int> parent_tag;
    for (const auto& be : parent.boundary_edges) parent_tag[edge_key(be.a, be.b)] = be.tag;
    std::map<int, Edge> midpoint_parent;
    for (const auto& [key, mid] : midpoint) midpoint_parent[mid] = key;

    finalize_boundary(child, [&](const Mesh&, int a, int b, int) {
      auto direct = parent_tag.find(edge_key(a, b));
      if (direct != parent_tag.end()) return direct->second;
      for (int v : {a, b}) {
        auto mp = midpoint_parent.find(v);
        if (mp == midpoint_parent.end()) continue;
        const int other = (v == a) ? b : a;
        if (other == mp->second.first || other == mp->second.second) {
          auto it = parent_tag.find(mp->second);
          if (it != parent_tag.end()) return it->second;
        }
      }
      return static_cast<int>(kBoundaryOuter);
    });
  }
};

}  // namespace

Mesh refine_uniform(const Mesh& mesh) {
  Refiner ref(mesh);
  for (std::size_t t = 0; t < mesh.n_triangles(); ++t) ref.red(static_cast<int>(t));
  ref.finish_cracks();
  ref.finish_boundary();
  ref.child.h_max = 0.5 * mesh.h_max;  // red children halve every edge
  return std::move(ref.child);
}

Mesh refine_toward(const Mesh& mesh, Point2 point, double rf) {
  if (rf <= 0.0 || rf > 1.0)
    throw std::invalid_argument("refine_toward: rf must lie in (0,1]");
  {
    double dist = std::numeric_limits<double>::max();
    for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t)
      dist = std::min(dist, point_triangle_distance(mesh, t, point));
    if (dist > 1e-9)
      throw std::invalid_argument("refine_toward: point lies outside the mesh");
  }
  const int passes = static_cast<int>(std::ceil(std::log2(1.0 / rf) - 1e-12));
  Mesh current = mesh;
  std::vector<char> is_green(current.n_triangles(), 0);

  double radius = 0.0;
  for (const auto& v : current.vertices) radius = std::max(radius, norm(v - point));
  radius *= 0.25;

  for (int pass = 0; pass < passes; ++pass) {
    const int nt = static_cast<int>(current.n_triangles());
    std::vector<char> mark(nt, 0);
    for (int t = 0; t < nt; ++t)
      if (point_triangle_distance(current, t, point) <= radius) mark[t] = 1;

    // Closure: a triangle with two split edges, or a green triangle that would
    // be split again, is promoted to red until the marking is stable.
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Edge> split;
      for (int t = 0; t < nt; ++t) {
        if (!mark[t]) continue;
        const auto& tri = current.triangles[t];
        for (int e = 0; e < 3; ++e) split.insert(edge_key(tri[e], tri[(e + 1) % 3]));
      }
      for (int t = 0; t < nt; ++t) {
        if (mark[t]) continue;
        const auto& tri = current.triangles[t];
        int hits = 0;
        for (int e = 0; e < 3; ++e)
          if (split.count(edge_key(tri[e], tri[(e + 1) % 3]))) ++hits;
        if (hits >= 2 || (hits == 1 && is_green[t])) {
          mark[t] = 1;
          changed = true;
        }
      }
    }

    Refiner ref(current);
    std::set<Edge> split;
    for (int t = 0; t < nt; ++t) {
      if (!mark[t]) continue;
      const auto& tri = current.triangles[t];
      for (int e = 0; e < 3; ++e) split.insert(edge_key(tri[e], tri[(e + 1) % 3]));
    }
    std::vector<char> next_green;
    for (int t = 0; t < nt; ++t) {
      if (mark[t]) {
        ref.red(t);
        next_green.insert(next_green.end(), 4, 0);
        continue;
      }
      const auto& tri = current.triangles[t];
      int split_edge = -1;
      for (int e = 0; e < 3; ++e)
        if (split.count(edge_key(tri[e], tri[(e + 1) % 3]))) split_edge = e;
      if (split_edge < 0) {
        ref.keep(t);
        next_green.push_back(is_green[t]);
      } else {
        ref.green(t, split_edge);
        next_green.insert(next_green.end(), 2, 1);
      }
    }
    ref.finish_cracks();
    ref.finish_boundary();
    ref.child.h_max = ref.child.compute_h_max();
    current = std::move(ref.child);
    is_green = std::move(next_green);
    radius *= 0.5;
  }
  return current;
}

bool MeshDiagnostics::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const MeshCheck& c) { return c.pass; });
}

std::string MeshDiagnostics::summary() const {
  std::ostringstream out;
  out << "vertices=" << n_vertices << " triangles=" << n_triangles
      << " boundary_edges=" << n_boundary_edges << " crack_pairs=" << n_crack_pairs
      << " h_max=" << h_max << " min_angle_deg=" << min_angle_deg << "\n";
  for (const auto& c : checks)
    out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name
        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return out.str();
}

MeshDiagnostics validate(const Mesh& mesh, double min_angle_floor_deg) {
  MeshDiagnostics diag;
  diag.n_vertices = mesh.n_vertices();
  diag.n_triangles = mesh.n_triangles();
  diag.n_boundary_edges = mesh.boundary_edges.size();
  diag.n_crack_pairs = mesh.crack_pairs.size();
  diag.h_max = mesh.h_max;

  auto add = [&](std::string name, bool pass, std::string detail = "") {
    diag.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < static_cast<int>(mesh.n_triangles()); ++t)
      if (mesh.triangle_area(t) <= 0.0) {
        ok = false;
        detail = "triangle " + std::to_string(t) + " has non-positive area";
        break;
      }
    add("positive_area", ok, detail);
  }

  std::map<Edge, int> incidence;
  for (const auto& tri : mesh.triangles)
    for (int e = 0; e < 3; ++e) incidence[edge_key(tri[e], tri[(e + 1) % 3])] += 1;

  {
    bool ok = true;
    std::string detail;
    for (const auto& [edge, count] : incidence)
      if (count > 2) {
        ok = false;
        detail = "edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                 ") belongs to " + std::to_string(count) + " triangles";
        break;
      }

    // Hanging nodes: no vertex may sit strictly inside another triangle's
    // edge.  Geometric duplicates along a crack are exempt.
    std::set<int> crack_nodes;
    for (const auto& [a, b] : mesh.crack_pairs) {
      crack_nodes.insert(a);
      crack_nodes.insert(b);
    }
    for (const auto& be : mesh.boundary_edges)
      if (be.tag == kBoundarySlitUpper || be.tag == kBoundarySlitLower) {
        crack_nodes.insert(be.a);
        crack_nodes.insert(be.b);
      }
    if (ok) {
      for (const auto& [edge, count] : incidence) {
        (void)count;
        const int a = edge.first, b = edge.second;
        const Point2 pa = mesh.vertices[a], pb = mesh.vertices[b];
        const double len = norm(pb - pa);
        const double lox = std::min(pa.x, pb.x) - 1e-12, hix = std::max(pa.x, pb.x) + 1e-12;
        const double loy = std::min(pa.y, pb.y) - 1e-12, hiy = std::max(pa.y, pb.y) + 1e-12;
        for (int v = 0; v < static_cast<int>(mesh.n_vertices()) && ok; ++v) {
          if (v == a || v == b) continue;
          const Point2 p = mesh.vertices[v];
          if (p.x < lox || p.x > hix || p.y < loy || p.y > hiy) continue;
          if (crack_nodes.count(v) && crack_nodes.count(a) && crack_nodes.count(b)) continue;
          const double d = point_segment_distance(p, pa, pb);
          const double da = norm(p - pa), db = norm(p - pb);
          if (d < 1e-12 * len && da > 1e-12 * len && db > 1e-12 * len) {
            ok = false;
            detail = "vertex " + std::to_string(v) + " hangs on edge (" + std::to_string(a) +
                     "," + std::to_string(b) + ")";
          }
        }
        if (!ok) break;
      }
    }
    add("conformity", ok, detail);
  }

  {
    std::set<Edge> topological;
    for (const auto& [edge, count] : incidence)
      if (count == 1) topological.insert(edge);
    std::set<Edge> stored;
    for (const auto& be : mesh.boundary_edges) stored.insert(edge_key(be.a, be.b));
    const bool ok = topological == stored;
    add("boundary_incidence", ok,
        ok ? "" : "stored boundary edges disagree with edge-triangle incidence");
  }

  {
    const double computed = mesh.compute_h_max();
    const bool ok = std::abs(mesh.h_max - computed) <= 8.0 * 1e-16 * std::max(1.0, computed);
    diag.h_max = computed;
    add("h_max", ok, ok ? "" : "stored h_max disagrees with the longest edge");
  }

  {
    const double angle_deg = mesh.min_angle() * 180.0 / kPi;
    diag.min_angle_deg = angle_deg;
    const bool ok = angle_deg >= min_angle_floor_deg - 1e-9;
    add("min_angle", ok,
        ok ? "" : "min angle " + std::to_string(angle_deg) + " below floor");
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& [a, b] : mesh.crack_pairs) {
      const Point2 pa = mesh.vertices[a], pb = mesh.vertices[b];
      if (pa.x != pb.x || pa.y != pb.y) {
        ok = false;
        detail = "crack pair (" + std::to_string(a) + "," + std::to_string(b) +
                 ") is not geometrically coincident";
        break;
      }
    }
    if (ok) {
      std::map<int, int> twin;
      for (const auto& [a, b] : mesh.crack_pairs) {
        twin[a] = b;
        twin[b] = a;
      }
      for (const auto& tri : mesh.triangles) {
        for (int e = 0; e < 3 && ok; ++e) {
          auto it = twin.find(tri[e]);
          if (it == twin.end()) continue;
          for (int k = 0; k < 3; ++k)
            if (tri[k] == it->second) {
              ok = false;
              detail = "crack twins " + std::to_string(tri[e]) + "," +
                       std::to_string(it->second) + " share a triangle";
            }
        }
        if (!ok) break;
      }
    }
    add("crack_integrity", ok, detail);
  }

  add("region_tags", mesh.region_tags.size() == mesh.n_triangles(),
      mesh.region_tags.size() == mesh.n_triangles() ? "" : "tag count mismatch");

  return diag;
}

}  // namespace mxe
