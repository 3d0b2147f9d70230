// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "mxe/enclosure.hpp"

namespace mxe {

struct StudyLevel {
  double h = 0.0;
  int n_dofs = 0;
  int m = 0;                   // matched bound count, -1 on mismatch
  std::vector<double> widths;  // per tracked eigenvalue when m >= 0
};

struct ConvergenceStudy {
  std::vector<StudyLevel> levels;
  int m = 0;                   // bounds tracked across all usable levels
  std::vector<double> slopes;  // least-squares slope of log(width) vs log(h) per j
  double t_up = 0.0, t_low = 0.0;
  int order = 0;
};

/// Runs bounds_at with fixed shifts on `levels` nested uniform refinements and
/// fits the convergence order of each enclosure width.  Levels whose branch
/// counts mismatch are recorded but excluded from the fit.
ConvergenceStudy convergence_study(const DomainSpec& spec, const MaterialCoefficients& mat,
                                   int order, int levels, double t_up, double t_low,
                                   const ProcedureOptions& opts = {});

struct PollutionEntry {
  double value = 0.0;
  int enclosure_index = -1;  // 1-based certified interval containing it, -1 if none
};

struct PollutionReport {
  EnclosureReport certified;
  std::vector<PollutionEntry> naive;   // plain Galerkin values of (A,B) in the window
  std::vector<int> missing;            // certified intervals with no naive value inside
  int n_spurious = 0;                  // naive values inside no certified interval
  bool window_certified = false;       // certified run converged with matched counts
};

/// Compares plain Galerkin eigenvalues of (A,B) in the window against the
/// certified enclosures.  With `naive_without_crack`, the naive computation
/// for a slit domain runs on the uncut square mesh, demonstrating what a
/// crack-unaware discretization reports.
PollutionReport pollution_demo(const DomainSpec& spec, const MaterialCoefficients& mat,
                               int order, double window_lo, double window_hi,
                               double delta = 1e-2, bool naive_without_crack = false,
                               const ProcedureOptions& opts = {});

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mxe
