// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/study.hpp"

#include <cmath>
#include <stdexcept>

#include "mxe/fespace.hpp"

namespace mxe {

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two samples");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy convergence_study(const DomainSpec& spec, const MaterialCoefficients& mat,
                                   int order, int levels, double t_up, double t_low,
                                   const ProcedureOptions& opts) {
  if (levels < 3) throw std::invalid_argument("convergence_study: need at least 3 levels");
  ConvergenceStudy study;
  study.t_up = t_up;
  study.t_low = t_low;
  study.order = order;

  Mesh mesh = generate(spec);
  for (int level = 0; level < levels; ++level) {
    if (level > 0) mesh = refine_uniform(mesh);
    StudyLevel entry;
    const FESpace space(mesh, order);
    entry.h = mesh.h_max;
    entry.n_dofs = space.n_dofs();
    if (space.n_dofs() > opts.dense_cap) {
      entry.m = -1;
      study.levels.push_back(entry);
      break;
    }
    const FormMatrices fm = assemble(space, mat);
    SolveOptions sopts;
    sopts.dense_cap = opts.dense_cap;
    sopts.zero_threshold = opts.zero_threshold;
    try {
      const BoundSet up = bounds_at(fm, t_up, Side::upper, t_low, sopts);
      const BoundSet low = bounds_at(fm, t_low, Side::lower, t_up, sopts);
      if (up.rho.size() == low.rho.size()) {
        const int m = static_cast<int>(up.rho.size());
        entry.m = m;
        for (int j = 1; j <= m; ++j)
          entry.widths.push_back(up.rho[j - 1] - low.rho[m - j]);
      } else {
        entry.m = -1;
      }
    } catch (const BoundsError&) {
      entry.m = -1;
    }
    study.levels.push_back(entry);
  }

  int m = -1;
  for (const auto& level : study.levels)
    if (level.m >= 0) m = (m < 0) ? level.m : std::min(m, level.m);
  study.m = std::max(m, 0);
  for (int j = 1; j <= study.m; ++j) {
    std::vector<double> hs, ws;
    for (const auto& level : study.levels)
      if (level.m >= j && level.widths[j - 1] > 0.0) {
        hs.push_back(level.h);
        ws.push_back(level.widths[j - 1]);
      }
    study.slopes.push_back(hs.size() >= 2 ? fit_loglog_slope(hs, ws) : 0.0);
  }
  return study;
}

PollutionReport pollution_demo(const DomainSpec& spec, const MaterialCoefficients& mat,
                               int order, double window_lo, double window_hi, double delta,
                               bool naive_without_crack, const ProcedureOptions& opts) {
  if (!(0.0 < window_lo && window_lo < window_hi))
    throw std::invalid_argument("pollution_demo: window must lie inside (0, inf)");

  PollutionReport report;
  if (!(delta > 0.0)) throw std::invalid_argument("pollution_demo: delta must be positive");
  report.certified = run_procedure(spec, mat, order, window_lo, window_hi, delta, opts);
  report.window_certified = report.certified.terminated == Termination::converged;

  // Naive side: plain Galerkin eigenvalues of (A,B), optionally on the uncut
  // mesh for slit domains.
  DomainSpec naive_spec = spec;
  if (naive_without_crack && spec.kind == DomainKind::slit)
    naive_spec.kind = DomainKind::square;
  Mesh mesh = generate(naive_spec);
  const int refinements =
      std::max(0, static_cast<int>(report.certified.iterations.size()) - 1);
  for (int k = 0; k < refinements; ++k) mesh = refine_uniform(mesh);
  const FESpace space(mesh, order);
  if (space.n_dofs() > opts.dense_cap)
    throw std::runtime_error("pollution_demo: naive mesh exceeds the dense cap");
  const FormMatrices fm = assemble(space, mat);
  const std::vector<double> omegas =
      generalized_eigenvalues(fm.A().to_dense(), fm.B().to_dense());

  for (double w : omegas) {
    if (w <= window_lo || w >= window_hi) continue;
    PollutionEntry entry;
    entry.value = w;
    for (const auto& e : report.certified.enclosures)
      if (w >= e.lower && w <= e.upper) {
        entry.enclosure_index = e.j;
        break;
      }
    if (entry.enclosure_index < 0) ++report.n_spurious;
    report.naive.push_back(entry);
  }
  for (const auto& e : report.certified.enclosures) {
    bool hit = false;
    for (const auto& entry : report.naive)
      if (entry.enclosure_index == e.j) hit = true;
    if (!hit) report.missing.push_back(e.j);
  }
  return report;
}

}  // namespace mxe
