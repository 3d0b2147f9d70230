// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "mxe/assembly.hpp"
#include "mxe/eigsolve.hpp"
#include "mxe/mesh.hpp"

namespace mxe {

enum class Side { upper, lower };  // '+' bounds above t, '-' bounds below t

struct BoundsError : std::runtime_error {
  enum class Kind { indefinite_rhs, empty_branch };
  Kind kind;
  double t;
  BoundsError(Kind k, double t_, const std::string& what)
      : std::runtime_error(what), kind(k), t(t_) {}
};

/// One-sided eigenvalue bounds rho_j(t,h) = t + 1/tau_j from one shift.
/// For side upper every rho > t (ascending in j); for side lower every
/// rho < t (descending in j), matching the branch ordering of the weak
/// problem.  Only bounds strictly between t and window_edge are kept.
struct BoundSet {
  double t = 0.0;
  Side side = Side::upper;
  std::vector<double> rho;      // index j-1
  std::vector<int> l_index;     // j, 1-based position in the branch
  double h = 0.0;
  int n_dofs = 0;
};

/// Computes the bounds at shift t up to window_edge.  Throws BoundsError with
/// kind indefinite_rhs when the pencil's right-hand side fails the SPD
/// factorization (the caller may perturb t), and empty_branch when the
/// requested sign has no eigenvalues at all.
BoundSet bounds_at(const FormMatrices& fm, double t, Side side, double window_edge,
                   const SolveOptions& opts = {});

/// Certified interval for one eigenvalue of the window.
struct Enclosure {
  int j = 0;            // 1-based index within the window
  double lower = 0.0, upper = 0.0;
  double width = 0.0;
  double t_up = 0.0, t_low = 0.0;
  bool converged = false;  // 0 < width < delta and lower <= upper
};

struct IterationLog {
  double h = 0.0;
  int n_dofs = 0;
  int m_up = 0, m_low = 0;
  std::vector<double> widths;  // only when the counts match
  std::vector<std::string> notes;
};

enum class Termination { converged, budget_exhausted };

struct EnclosureReport {
  std::vector<Enclosure> enclosures;
  int m_tilde = -1;                 // predicted eigenvalue count in (t_up, t_low)
  std::vector<IterationLog> iterations;
  Termination terminated = Termination::budget_exhausted;

  // run parameters, echoed for serialization
  double t_up = 0.0, t_low = 0.0, delta = 0.0;
  int order = 0;
  DomainSpec domain;
  double final_h = 0.0;
  int final_n_dofs = 0;
};

struct ProcedureOptions {
  int budget = 6;        ///< max uniform refinements
  int dense_cap = 8000;  ///< refuse meshes whose space exceeds this
  double zero_threshold = 1e-10;
};

/// The certified enclosure loop: on each mesh, upper bounds at t_up and lower
/// bounds at t_low are computed and paired (the lower branch re-indexed in
/// reverse); when the counts disagree or some pair is wider than delta or
/// crossed, the mesh is refined uniformly and the loop repeats.  Exits
/// converged when every pair satisfies 0 < upper - lower < delta, or
/// immediately when both counts are zero (certifiably empty window).  On
/// budget exhaustion the report is returned flagged, never thrown.
/// An indefinite right-hand side is handled by nudging the offending shift
/// outward by 1e-6 (t_low - t_up), at most three times, logged.
EnclosureReport run_procedure(const DomainSpec& spec, const MaterialCoefficients& mat,
                              int order, double t_up, double t_low, double delta,
                              const ProcedureOptions& opts = {});

/// Same loop starting from an explicit mesh (the DomainSpec metadata in the
/// report is taken from `spec` but the mesh is used as given).
EnclosureReport run_procedure_on_mesh(const Mesh& mesh, const DomainSpec& spec,
                                      const MaterialCoefficients& mat, int order,
                                      double t_up, double t_low, double delta,
                                      const ProcedureOptions& opts = {});

struct SweepRow {
  double t = 0.0;
  int j_used = 0;       // branch index matched to the target eigenvalue
  double rho = 0.0;
  bool valid = false;
  std::string note;
};

/// For a fixed trial space, reports the bound for the target eigenvalue
/// (1-based index into `reference`, multiplicities expanded) at each shift of
/// the grid.  The branch index is recomputed per shift by counting reference
/// eigenvalues between the shift and the target.  Shifts on the wrong side of
/// the target or with an indefinite right-hand side yield invalid rows.
std::vector<SweepRow> sweep_t(const FormMatrices& fm, int target_index, Side side,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& reference,
                              const SolveOptions& opts = {});

}  // namespace mxe
