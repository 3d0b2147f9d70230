// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mxe/enclosure.hpp"
#include "mxe/fespace.hpp"
#include "mxe/reference.hpp"
#include "support/properties.hpp"

using namespace mxe;

namespace {

FormMatrices assemble_square(int n, int r, FESpace** space_out, const Mesh** mesh_out,
                             std::vector<std::unique_ptr<FESpace>>& keep_space,
                             std::vector<std::unique_ptr<Mesh>>& keep_mesh) {
  keep_mesh.push_back(std::make_unique<Mesh>(generate({DomainKind::square, n})));
  keep_space.push_back(std::make_unique<FESpace>(*keep_mesh.back(), r));
  if (space_out) *space_out = keep_space.back().get();
  if (mesh_out) *mesh_out = keep_mesh.back().get();
  return assemble(*keep_space.back(), MaterialCoefficients::uniform());
}

}  // namespace

TEST_CASE("bounds at r=3 pin the first eigenvalue to 1e-4") {
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(8, 3, nullptr, nullptr, spaces, meshes);

  const BoundSet up = bounds_at(fm, 0.5, Side::upper, 1.2);
  REQUIRE(up.rho.size() == 2);  // omega = 1 has multiplicity 2
  for (double rho : up.rho) {
    CHECK(rho >= 1.0);
    CHECK(rho - 1.0 <= 1e-4);
  }
  const BoundSet low = bounds_at(fm, 1.2, Side::lower, 0.5);
  REQUIRE(low.rho.size() == 2);
  for (double rho : low.rho) {
    CHECK(rho <= 1.0);
    CHECK(1.0 - rho <= 1e-4);
  }
  CHECK(up.l_index == std::vector<int>{1, 2});
}

TEST_CASE("empty branch is reported") {
  // On the n=1 square only H survives, A = 0, and every pencil eigenvalue is
  // negative for t > 0: the upper branch is empty.
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(1, 1, nullptr, nullptr, spaces, meshes);
  CHECK_THROWS_AS(bounds_at(fm, 5.0, Side::upper, 6.0), BoundsError);
  try {
    bounds_at(fm, 5.0, Side::upper, 6.0);
  } catch (const BoundsError& err) {
    CHECK(err.kind == BoundsError::Kind::empty_branch);
  }
}

TEST_CASE("window edge preconditions") {
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(2, 1, nullptr, nullptr, spaces, meshes);
  CHECK_THROWS_AS(bounds_at(fm, 1.0, Side::upper, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(bounds_at(fm, 1.0, Side::lower, 2.0), std::invalid_argument);
}

TEST_CASE("procedure converges on the square and certifies omega=1") {
  const EnclosureReport report =
      run_procedure({DomainKind::square, 4}, MaterialCoefficients::uniform(), 1, 0.5, 1.2,
                    0.2, {});
  CHECK(report.terminated == Termination::converged);
  REQUIRE(report.m_tilde == 2);
  for (const auto& e : report.enclosures) {
    CHECK(e.converged);
    CHECK(e.lower <= 1.0);
    CHECK(1.0 <= e.upper);
    CHECK(e.width < 0.2);
    CHECK(e.lower < report.t_low);
    CHECK(e.upper > report.t_up);
  }
}

TEST_CASE("loose tolerance exits on the first iteration") {
  const EnclosureReport report =
      run_procedure({DomainKind::square, 8}, MaterialCoefficients::uniform(), 1, 0.5, 1.2,
                    10.0, {});
  CHECK(report.terminated == Termination::converged);
  CHECK(report.iterations.size() == 1);
}

TEST_CASE("input validation") {
  const MaterialCoefficients mat = MaterialCoefficients::uniform();
  CHECK_THROWS_AS(run_procedure({DomainKind::square, 2}, mat, 1, -0.5, 1.2, 1e-2, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_procedure({DomainKind::square, 2}, mat, 1, 1.2, 0.5, 1e-2, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_procedure({DomainKind::square, 2}, mat, 1, 0.5, 1.2, -1.0, {}),
                  std::invalid_argument);
}

TEST_CASE("empty-looking window refines up to the budget") {
  // (1.5, 1.9) holds no square eigenvalue (sqrt(2) < 1.5, 2 > 1.9); the counts
  // certify emptiness one-sidedly, and the loop keeps refining to the budget.
  ProcedureOptions opts;
  opts.budget = 2;
  const EnclosureReport report = run_procedure(
      {DomainKind::square, 8}, MaterialCoefficients::uniform(), 1, 1.5, 1.9, 1e-2, opts);
  CHECK(report.terminated == Termination::budget_exhausted);
  CHECK(report.m_tilde == 0);
  CHECK(report.enclosures.empty());
  for (const auto& it : report.iterations) {
    CHECK(it.m_up == 0);
    CHECK(it.m_low == 0);
  }
}

TEST_CASE("indefinite right-hand side nudges then errors out") {
  // t_up ~ 0 leaves R ~ C singular (curl-free fields); after three outward
  // nudges the procedure gives up with the indefinite error.
  CHECK_THROWS_AS(run_procedure({DomainKind::square, 2}, MaterialCoefficients::uniform(), 1,
                                1e-13, 1.2, 1e-2, {}),
                  BoundsError);
}

TEST_CASE("lower bound for a fixed index is non-increasing between crossings") {
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(8, 1, nullptr, nullptr, spaces, meshes);
  double prev = 1e300;
  for (double t : {1.05, 1.1, 1.2, 1.3}) {
    const BoundSet low = bounds_at(fm, t, Side::lower, 0.0);
    REQUIRE(!low.rho.empty());
    CHECK(low.rho[0] <= prev + 1e-10);
    prev = low.rho[0];
  }
}

TEST_CASE("sweep matches the branch index to the target eigenvalue") {
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(8, 1, nullptr, nullptr, spaces, meshes);
  const std::vector<double> refs = square_exact(10).expanded();
  // target omega_3 = sqrt(2): j=1 from t=1.7 (nothing between), j=3 from t=2.5
  // (the pair at 2 intervenes)
  const auto rows = sweep_t(fm, 3, Side::lower, {1.7, 2.5, 1.2}, refs);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].valid);
  CHECK(rows[0].j_used == 1);
  CHECK(rows[1].valid);
  CHECK(rows[1].j_used == 3);
  CHECK_FALSE(rows[2].valid);  // t below the target
  for (const auto& row : rows)
    if (row.valid) CHECK(row.rho <= std::sqrt(2.0) + 1e-12);
}

TEST_CASE("sweep rejects bad indices") {
  std::vector<std::unique_ptr<FESpace>> spaces;
  std::vector<std::unique_ptr<Mesh>> meshes;
  const FormMatrices fm = assemble_square(2, 1, nullptr, nullptr, spaces, meshes);
  CHECK_THROWS_AS(sweep_t(fm, 0, Side::lower, {1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_t(fm, 5, Side::lower, {1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("nested refinement monotonicity property group") {
  CHECK(props::nested_refinement_bound_monotonicity() == "");
}
