// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mxe {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::string pt(double v) { return format_double(v); }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += "\"";
  return out;
}

void write_mesh_json(const Mesh& mesh, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n  \"vertices\": [";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    out << (i ? ", " : "") << "[" << pt(mesh.vertices[i].x) << ", " << pt(mesh.vertices[i].y)
        << "]";
  out << "],\n  \"triangles\": [";
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i)
    out << (i ? ", " : "") << "[" << mesh.triangles[i][0] << ", " << mesh.triangles[i][1]
        << ", " << mesh.triangles[i][2] << "]";
  out << "],\n  \"boundary_edges\": [";
  for (std::size_t i = 0; i < mesh.boundary_edges.size(); ++i) {
    const auto& be = mesh.boundary_edges[i];
    out << (i ? ", " : "") << "{\"v\": [" << be.a << ", " << be.b << "], \"tag\": " << be.tag
        << "}";
  }
  out << "],\n  \"region_tags\": [";
  for (std::size_t i = 0; i < mesh.region_tags.size(); ++i)
    out << (i ? ", " : "") << mesh.region_tags[i];
  out << "],\n  \"crack_pairs\": [";
  for (std::size_t i = 0; i < mesh.crack_pairs.size(); ++i)
    out << (i ? ", " : "") << "[" << mesh.crack_pairs[i].first << ", "
        << mesh.crack_pairs[i].second << "]";
  out << "]\n}\n";
}

Mesh read_mesh_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& err) {
    throw std::runtime_error("failed to parse '" + path + "': " + err.what());
  }
  Mesh mesh;
  for (const auto& v : j.at("vertices"))
    mesh.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  for (const auto& t : j.at("triangles"))
    mesh.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
  for (const auto& e : j.at("boundary_edges")) {
    BoundaryEdge be;
    be.a = e.at("v").at(0).get<int>();
    be.b = e.at("v").at(1).get<int>();
    be.tag = e.at("tag").get<int>();
    const Point2 d = mesh.vertices.at(be.b) - mesh.vertices.at(be.a);
    const double len = norm(d);
    be.tangent = {d.x / len, d.y / len};
    mesh.boundary_edges.push_back(be);
  }
  for (const auto& r : j.at("region_tags")) mesh.region_tags.push_back(r.get<int>());
  for (const auto& c : j.at("crack_pairs"))
    mesh.crack_pairs.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  mesh.h_max = mesh.compute_h_max();
  return mesh;
}

void write_coo(const SymMatrix& m, const std::string& path) {
  std::ofstream out = open_out(path);
  for (int i = 0; i < m.n(); ++i)
    for (int k = m.pattern->row_ptr[i]; k < m.pattern->row_ptr[i + 1]; ++k)
      out << i << " " << m.pattern->col[k] << " " << pt(m.val[k]) << "\n";
}

void write_vtk(const VtkUnstructuredGrid& grid, const std::string& path) {
  for (const auto& [name, values] : grid.point_data)
    if (values.size() != grid.points.size())
      throw std::invalid_argument("write_vtk: array '" + name + "' length mismatch");
  for (const auto& tri : grid.triangles)
    for (int v : tri)
      if (v < 0 || v >= static_cast<int>(grid.points.size()))
        throw std::invalid_argument("write_vtk: cell index out of range");

  std::ofstream out = open_out(path);
  out << "# vtk DataFile Version 3.0\n";
  out << "maxwell-enclosures field export\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << grid.points.size() << " double\n";
  for (const auto& p : grid.points) out << pt(p.x) << " " << pt(p.y) << " 0\n";
  out << "CELLS " << grid.triangles.size() << " " << 4 * grid.triangles.size() << "\n";
  for (const auto& tri : grid.triangles)
    out << "3 " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
  out << "CELL_TYPES " << grid.triangles.size() << "\n";
  for (std::size_t i = 0; i < grid.triangles.size(); ++i) out << "5\n";
  if (!grid.point_data.empty()) {
    out << "POINT_DATA " << grid.points.size() << "\n";
    for (const auto& [name, values] : grid.point_data) {
      out << "SCALARS " << name << " double 1\n";
      out << "LOOKUP_TABLE default\n";
      for (double v : values) out << pt(v) << "\n";
    }
  }
}

VtkUnstructuredGrid field_grid(const FESpace& space, const CoefficientVector& u,
                               bool normalize) {
  const int r = space.order();
  VtkUnstructuredGrid grid;
  std::vector<double> emag, h;

  auto lattice_index = [r](int a, int b) { return a * (r + 1) - a * (a - 1) / 2 + b; };

  for (int t = 0; t < static_cast<int>(space.mesh().n_triangles()); ++t) {
    const auto& local = space.tri_nodes(t);
    const int base = static_cast<int>(grid.points.size());
    for (int k = 0; k < space.nodes_per_tri(); ++k) {
      const int node = local[k];
      grid.points.push_back(space.nodes()[node]);
      const double e1 = space.dof(node, kE1) >= 0 ? u.values[space.dof(node, kE1)] : 0.0;
      const double e2 = space.dof(node, kE2) >= 0 ? u.values[space.dof(node, kE2)] : 0.0;
      emag.push_back(std::hypot(e1, e2));
      h.push_back(u.values[space.dof(node, kH)]);
    }
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r - a; ++b) {
        grid.triangles.push_back({base + lattice_index(a, b), base + lattice_index(a + 1, b),
                                  base + lattice_index(a, b + 1)});
        if (a + b < r - 1)
          grid.triangles.push_back({base + lattice_index(a + 1, b),
                                    base + lattice_index(a + 1, b + 1),
                                    base + lattice_index(a, b + 1)});
      }
  }
  if (normalize) {
    for (auto* arr : {&emag, &h}) {
      double mx = 0.0;
      for (double v : *arr) mx = std::max(mx, std::abs(v));
      if (mx > 0.0)
        for (double& v : *arr) v /= mx;
    }
  }
  grid.point_data.emplace_back("E_magnitude", std::move(emag));
  grid.point_data.emplace_back("H", std::move(h));
  return grid;
}

namespace {

std::string domain_json(const DomainSpec& spec) {
  std::ostringstream out;
  out << "{\"kind\": " << json_quote(to_string(spec.kind)) << ", \"n\": " << spec.n;
  if (spec.grading)
    out << ", \"grading\": {\"x\": " << pt(spec.grading->point.x)
        << ", \"y\": " << pt(spec.grading->point.y) << ", \"rf\": " << pt(spec.grading->rf)
        << "}";
  else
    out << ", \"grading\": null";
  out << ", \"jitter\": " << pt(spec.jitter) << ", \"seed\": " << spec.seed << "}";
  return out.str();
}

std::string enclosure_json(const Enclosure& e) {
  std::ostringstream out;
  out << "{\"j\": " << e.j << ", \"lower\": " << pt(e.lower) << ", \"upper\": " << pt(e.upper)
      << ", \"width\": " << pt(e.width) << ", \"t_up\": " << pt(e.t_up)
      << ", \"t_low\": " << pt(e.t_low) << ", \"converged\": " << (e.converged ? "true" : "false")
      << "}";
  return out.str();
}

}  // namespace

void write_report_json(const EnclosureReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n";
  out << "  \"domain\": " << domain_json(report.domain) << ",\n";
  out << "  \"order\": " << report.order << ",\n";
  out << "  \"t_up\": " << pt(report.t_up) << ",\n";
  out << "  \"t_low\": " << pt(report.t_low) << ",\n";
  out << "  \"delta\": " << pt(report.delta) << ",\n";
  out << "  \"terminated\": "
      << json_quote(report.terminated == Termination::converged ? "converged"
                                                                : "budget_exhausted")
      << ",\n";
  out << "  \"m_tilde\": " << report.m_tilde << ",\n";
  out << "  \"final_h\": " << pt(report.final_h) << ",\n";
  out << "  \"final_n_dofs\": " << report.final_n_dofs << ",\n";
  out << "  \"enclosures\": [";
  for (std::size_t i = 0; i < report.enclosures.size(); ++i)
    out << (i ? ", " : "") << enclosure_json(report.enclosures[i]);
  out << "],\n  \"iterations\": [";
  for (std::size_t i = 0; i < report.iterations.size(); ++i) {
    const auto& it = report.iterations[i];
    out << (i ? ", " : "") << "{\"h\": " << pt(it.h) << ", \"n_dofs\": " << it.n_dofs
        << ", \"m_up\": " << it.m_up << ", \"m_low\": " << it.m_low << ", \"widths\": [";
    for (std::size_t k = 0; k < it.widths.size(); ++k)
      out << (k ? ", " : "") << pt(it.widths[k]);
    out << "], \"notes\": [";
    for (std::size_t k = 0; k < it.notes.size(); ++k)
      out << (k ? ", " : "") << json_quote(it.notes[k]);
    out << "]}";
  }
  out << "]\n}\n";
}

void write_report_csv(const EnclosureReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "j,lower,upper,width,converged\n";
  for (const auto& e : report.enclosures)
    out << e.j << "," << pt(e.lower) << "," << pt(e.upper) << "," << pt(e.width) << ","
        << (e.converged ? "true" : "false") << "\n";
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "t,j,rho,valid,note\n";
  for (const auto& row : rows)
    out << pt(row.t) << "," << row.j_used << "," << pt(row.rho) << ","
        << (row.valid ? "true" : "false") << "," << row.note << "\n";
}

void write_study_csv(const ConvergenceStudy& study, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "h,n_dofs,m";
  for (int j = 1; j <= study.m; ++j) out << ",width_" << j;
  out << "\n";
  for (const auto& level : study.levels) {
    out << pt(level.h) << "," << level.n_dofs << "," << level.m;
    for (int j = 1; j <= study.m; ++j)
      out << "," << (level.m >= j ? pt(level.widths[j - 1]) : "");
    out << "\n";
  }
  out << "# slopes";
  for (double s : study.slopes) out << " " << pt(s);
  out << "\n";
}

void write_study_loglog(const ConvergenceStudy& study, const std::string& path) {
  std::ofstream out = open_out(path);
  for (const auto& level : study.levels)
    if (level.m >= 1) out << pt(level.h) << " " << pt(level.widths[0]) << "\n";
}

void write_pollution_json(const PollutionReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n  \"window_certified\": " << (report.window_certified ? "true" : "false")
      << ",\n  \"n_spurious\": " << report.n_spurious << ",\n  \"missing\": [";
  for (std::size_t i = 0; i < report.missing.size(); ++i)
    out << (i ? ", " : "") << report.missing[i];
  out << "],\n  \"naive\": [";
  for (std::size_t i = 0; i < report.naive.size(); ++i)
    out << (i ? ", " : "") << "{\"value\": " << pt(report.naive[i].value)
        << ", \"enclosure\": " << report.naive[i].enclosure_index << "}";
  out << "],\n  \"enclosures\": [";
  for (std::size_t i = 0; i < report.certified.enclosures.size(); ++i)
    out << (i ? ", " : "") << enclosure_json(report.certified.enclosures[i]);
  out << "]\n}\n";
}

void write_json_object(const std::vector<std::pair<std::string, std::string>>& entries,
                       const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    out << "  " << json_quote(entries[i].first) << ": " << entries[i].second
        << (i + 1 < entries.size() ? ",\n" : "\n");
  out << "}\n";
}

}  // namespace mxe
