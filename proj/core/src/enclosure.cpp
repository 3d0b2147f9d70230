// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/enclosure.hpp"

#include <algorithm>
#include <cmath>

#include "mxe/fespace.hpp"

namespace mxe {

BoundSet bounds_at(const FormMatrices& fm, double t, Side side, double window_edge,
                   const SolveOptions& opts) {
  if (side == Side::upper && !(window_edge > t))
    throw std::invalid_argument("bounds_at: upper side needs window_edge > t");
  if (side == Side::lower && !(window_edge < t))
    throw std::invalid_argument("bounds_at: lower side needs window_edge < t");

  const Pencil pencil = build_pencil(fm, t);
  const FactorizationResult fac = factorize_spd(pencil.R());
  if (!fac.success)
    throw BoundsError(BoundsError::Kind::indefinite_rhs, t,
                      "bounds_at: right-hand matrix indefinite at t = " + std::to_string(t) +
                          " (pivot " + std::to_string(fac.pivot_index) + ")");

  SolveOptions solve_opts = opts;
  solve_opts.want_vectors = false;
  const SignedSpectrum spec = solve(pencil, solve_opts);

  BoundSet out;
  out.t = t;
  out.side = side;
  out.h = fm.space->mesh().h_max;
  out.n_dofs = fm.space->n_dofs();

  const std::vector<double>& branch = side == Side::upper ? spec.tau_pos : spec.tau_neg;
  if (branch.empty())
    throw BoundsError(BoundsError::Kind::empty_branch, t,
                      "bounds_at: no eigenvalues on the requested branch at t = " +
                          std::to_string(t));
  for (std::size_t k = 0; k < branch.size(); ++k) {
    const double rho = t + 1.0 / branch[k];
    if (side == Side::upper && rho >= window_edge) break;
    if (side == Side::lower && rho <= window_edge) break;
    out.rho.push_back(rho);
    out.l_index.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

namespace {

struct PairedBounds {
  std::vector<Enclosure> enclosures;
  bool all_converged = true;
};

PairedBounds pair_bounds(const BoundSet& up, const BoundSet& low, double t_up, double t_low,
                         double delta) {
  PairedBounds out;
  const int m = static_cast<int>(up.rho.size());
  for (int j = 1; j <= m; ++j) {
    Enclosure e;
    e.j = j;
    e.upper = up.rho[j - 1];
    e.lower = low.rho[m - j];  // step (c): lower branch is re-indexed in reverse
    e.width = e.upper - e.lower;
    e.t_up = t_up;
    e.t_low = t_low;
    e.converged = e.lower <= e.upper && e.width < delta && e.width > 0.0;
    out.all_converged = out.all_converged && e.converged;
    out.enclosures.push_back(e);
  }
  return out;
}

}  // namespace

EnclosureReport run_procedure_on_mesh(const Mesh& initial_mesh, const DomainSpec& spec,
                                      const MaterialCoefficients& mat, int order,
                                      double t_up, double t_low, double delta,
                                      const ProcedureOptions& opts) {
  if (!(0.0 < t_up && t_up < t_low))
    throw std::invalid_argument("run_procedure: need 0 < t_up < t_low");
  if (!(delta > 0.0)) throw std::invalid_argument("run_procedure: delta must be positive");
  if (opts.budget < 1) throw std::invalid_argument("run_procedure: budget must be >= 1");

  EnclosureReport report;
  report.t_up = t_up;
  report.t_low = t_low;
  report.delta = delta;
  report.order = order;
  report.domain = spec;

  Mesh mesh = initial_mesh;
  double cur_t_up = t_up, cur_t_low = t_low;

  for (int iter = 0; iter <= opts.budget; ++iter) {
    IterationLog log;
    const FESpace space(mesh, order);
    log.h = mesh.h_max;
    log.n_dofs = space.n_dofs();
    report.final_h = mesh.h_max;
    report.final_n_dofs = space.n_dofs();

    if (space.n_dofs() > opts.dense_cap) {
      log.notes.push_back("stopped: " + std::to_string(space.n_dofs()) +
                          " DOFs exceed the dense cap " + std::to_string(opts.dense_cap));
      report.iterations.push_back(std::move(log));
      report.terminated = Termination::budget_exhausted;
      return report;
    }

    const FormMatrices fm = assemble(space, mat);
    SolveOptions sopts;
    sopts.dense_cap = opts.dense_cap;
    sopts.zero_threshold = opts.zero_threshold;

    // Bounds at both shifts; an indefinite right-hand side nudges the shift
    // outward (enlarging the window never invalidates a certification).
    const double nudge = 1e-6 * (t_low - t_up);
    auto bounds_with_retry = [&](double& t, Side side, double edge) {
      for (int attempt = 0;; ++attempt) {
        try {
          return bounds_at(fm, t, side, edge, sopts);
        } catch (const BoundsError& err) {
          if (err.kind != BoundsError::Kind::indefinite_rhs || attempt >= 3) throw;
          t += side == Side::upper ? -nudge : nudge;
          log.notes.push_back("indefinite right-hand side; nudged t to " +
                              std::to_string(t));
        }
      }
    };

    int m_up = 0, m_low = 0;
    BoundSet up, low;
    bool have_up = false, have_low = false;
    try {
      up = bounds_with_retry(cur_t_up, Side::upper, cur_t_low);
      have_up = true;
      m_up = static_cast<int>(up.rho.size());
    } catch (const BoundsError& err) {
      if (err.kind != BoundsError::Kind::empty_branch) throw;
      log.notes.push_back("upper branch empty");
    }
    try {
      low = bounds_with_retry(cur_t_low, Side::lower, cur_t_up);
      have_low = true;
      m_low = static_cast<int>(low.rho.size());
    } catch (const BoundsError& err) {
      if (err.kind != BoundsError::Kind::empty_branch) throw;
      log.notes.push_back("lower branch empty");
    }
    (void)have_up;
    (void)have_low;

    log.m_up = m_up;
    log.m_low = m_low;

    if (m_up == m_low) {
      report.m_tilde = m_up;
      if (m_up == 0) {
        // The window appears empty.  The counts are one-sided certificates,
        // so an empty-looking window on a coarse mesh may still hold
        // eigenvalues; refine and retry up to the budget.
        log.notes.push_back("window appears empty; refining");
        report.enclosures.clear();
        report.iterations.push_back(std::move(log));
        if (iter == opts.budget) break;
        mesh = refine_uniform(mesh);
        continue;
      }
      PairedBounds paired = pair_bounds(up, low, cur_t_up, cur_t_low, delta);
      for (const auto& e : paired.enclosures) log.widths.push_back(e.width);
      report.enclosures = std::move(paired.enclosures);
      report.iterations.push_back(std::move(log));
      if (paired.all_converged) {
        report.terminated = Termination::converged;
        return report;
      }
    } else {
      report.enclosures.clear();
      report.iterations.push_back(std::move(log));
    }

    if (iter == opts.budget) break;
    mesh = refine_uniform(mesh);
  }
  report.terminated = Termination::budget_exhausted;
  return report;
}

EnclosureReport run_procedure(const DomainSpec& spec, const MaterialCoefficients& mat,
                              int order, double t_up, double t_low, double delta,
                              const ProcedureOptions& opts) {
  return run_procedure_on_mesh(generate(spec), spec, mat, order, t_up, t_low, delta, opts);
}

std::vector<SweepRow> sweep_t(const FormMatrices& fm, int target_index, Side side,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& reference,
                              const SolveOptions& opts) {
  if (target_index < 1 || target_index > static_cast<int>(reference.size()))
    throw std::invalid_argument("sweep_t: target index out of range of the reference list");
  const int idx0 = target_index - 1;

  std::vector<SweepRow> rows;
  for (double t : t_grid) {
    SweepRow row;
    row.t = t;
    int j = 0;
    if (side == Side::lower) {
      const int less = static_cast<int>(
          std::count_if(reference.begin(), reference.end(), [&](double v) { return v < t; }));
      j = less - idx0;
    } else {
      const int leq = static_cast<int>(std::count_if(reference.begin(), reference.end(),
                                                     [&](double v) { return v <= t; }));
      j = idx0 - leq + 1;
    }
    if (j < 1) {
      row.note = "shift on the wrong side of the target eigenvalue";
      rows.push_back(row);
      continue;
    }
    row.j_used = j;
    try {
      const double far_edge = side == Side::lower ? -1e300 : 1e300;
      BoundSet bs = bounds_at(fm, t, side, far_edge, opts);
      if (j <= static_cast<int>(bs.rho.size())) {
        row.rho = bs.rho[j - 1];
        row.valid = true;
      } else {
        row.note = "branch shorter than the required index";
      }
    } catch (const BoundsError& err) {
      row.note = err.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mxe
