// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mxe/enclosure.hpp"
#include "mxe/fespace.hpp"
#include "mxe/linalg.hpp"
#include "mxe/mesh.hpp"
#include "mxe/study.hpp"

namespace mxe {

/// 17-significant-digit decimal rendering used by every writer; round-trips
/// IEEE doubles exactly.
std::string format_double(double v);

/// Mesh JSON: {"vertices": [[x,y],...], "triangles": [[i,j,k],...],
/// "boundary_edges": [{"v":[i,j],"tag":t},...], "region_tags": [...],
/// "crack_pairs": [[i,j],...]}.  Writing is deterministic; read(write(mesh))
/// reproduces the mesh bit-exactly.
void write_mesh_json(const Mesh& mesh, const std::string& path);
Mesh read_mesh_json(const std::string& path);

/// Symmetric coordinate text: one "i j value" line per stored upper-triangle
/// entry (0-based indices), sorted by (i,j).
void write_coo(const SymMatrix& m, const std::string& path);

struct VtkUnstructuredGrid {
  std::vector<Point2> points;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::pair<std::string, std::vector<double>>> point_data;
};

/// VTK legacy ASCII writer (DataFile version 3.0, UNSTRUCTURED_GRID).
void write_vtk(const VtkUnstructuredGrid& grid, const std::string& path);

/// Samples |E| and H of a discrete field on the P1-subdivided mesh (one
/// sub-triangle per Lagrange lattice cell).  With `normalize`, each array is
/// scaled to maximum absolute value 1, the convention used for density plots.
VtkUnstructuredGrid field_grid(const FESpace& space, const CoefficientVector& u,
                               bool normalize = true);

void write_report_json(const EnclosureReport& report, const std::string& path);
/// CSV summary: header "j,lower,upper,width,converged".
void write_report_csv(const EnclosureReport& report, const std::string& path);

/// CSV with header "t,j,rho,valid,note".
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// CSV with header "h,n_dofs,m,width_1,..."; slopes in a trailing comment.
void write_study_csv(const ConvergenceStudy& study, const std::string& path);
/// Two-column h / width_1 file for log-log plotting.
void write_study_loglog(const ConvergenceStudy& study, const std::string& path);

void write_pollution_json(const PollutionReport& report, const std::string& path);

/// {"key": value, ...} with the values already rendered as JSON tokens,
/// written in the given order.  Used for the config echo.
void write_json_object(const std::vector<std::pair<std::string, std::string>>& entries,
                       const std::string& path);

std::string json_quote(const std::string& s);

}  // namespace mxe
