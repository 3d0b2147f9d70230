// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "mxe/reference.hpp"

using namespace mxe;

TEST_CASE("first square eigenvalues with multiplicities") {
  const ReferenceSpectrum spec = square_exact(5);
  const std::vector<double> expanded = spec.expanded();
  REQUIRE(expanded.size() >= 5);
  CHECK(expanded[0] == doctest::Approx(1.0));
  CHECK(expanded[1] == doctest::Approx(1.0));
  CHECK(expanded[2] == doctest::Approx(std::sqrt(2.0)));
  CHECK(expanded[3] == doctest::Approx(2.0));
  CHECK(expanded[4] == doctest::Approx(2.0));
  CHECK(spec.values[0].multiplicity == 2);
  CHECK(spec.values[1].multiplicity == 1);
  CHECK(spec.values[2].multiplicity == 2);
}

TEST_CASE("smallest nonzero lattice norm") {
  CHECK(square_exact(1).expanded()[0] == doctest::Approx(1.0));
}

TEST_CASE("the 100th distinct square eigenvalue is sqrt(261)") {
  const ReferenceSpectrum spec = square_exact(400);
  CHECK(spec.distinct(100) == doctest::Approx(std::sqrt(261.0)).epsilon(1e-14));
}

TEST_CASE("multiplicities match an independent double loop") {
  const ReferenceSpectrum spec = square_exact(60);
  std::map<long long, int> independent;
  for (int l = 0; l <= 64; ++l)
    for (int m = 0; m <= 64; ++m) {
      if (l == 0 && m == 0) continue;
      independent[1LL * l * l + m * m] += 1;
    }
  for (const auto& v : spec.values) {
    const long long k = std::llround(v.value * v.value);
    CHECK(independent.at(k) == v.multiplicity);
  }
  for (std::size_t i = 1; i < spec.values.size(); ++i)
    CHECK(spec.values[i - 1].value < spec.values[i].value);
}

TEST_CASE("embedded literature tables") {
  const ReferenceSpectrum lshape = literature_reference(DomainKind::lshape);
  CHECK(lshape.distinct(2) == 1.19678275574);
  CHECK(lshape.expanded()[0] == 0.773334985176);
  CHECK(lshape.expanded()[2] == 2.0);
  CHECK(lshape.expanded()[3] == 2.0);

  const ReferenceSpectrum slit = literature_reference(DomainKind::slit);
  const auto slit_values = slit.expanded();
  CHECK(slit_values[0] == 0.647375015);
  CHECK(slit_values[3] == 2.0);  // omega_4 = omega_5 = 2
  CHECK(slit_values[4] == 2.0);
  CHECK(slit_values[2] == 1.280686161);

  const ReferenceSpectrum trans = literature_reference(DomainKind::square4);
  CHECK(trans.expanded()[0] == 1.15954813181);
  CHECK(trans.expanded().size() == 10);

  CHECK_THROWS_AS(literature_reference(DomainKind::square), std::invalid_argument);
}

TEST_CASE("square modes satisfy the curl identities and the boundary condition") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> uni(0.0, M_PI);
  for (auto [l, m] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}}) {
    const AnalyticField f = square_mode(l, m);
    const double w = std::sqrt(double(l * l + m * m));
    for (int rep = 0; rep < 20; ++rep) {
      const Point2 p{uni(rng), uni(rng)};
      CHECK(f.curl_e(p) == doctest::Approx(w * f.h(p)).epsilon(1e-12));
      const Point2 ch = f.curl_h(p);
      CHECK(ch.x == doctest::Approx(w * f.e1(p)).epsilon(1e-12));
      CHECK(ch.y == doctest::Approx(w * f.e2(p)).epsilon(1e-12));
    }
    for (double s : {0.1, 0.7, 2.9}) {
      CHECK(std::abs(f.e1({s, 0.0})) <= 1e-12);       // bottom: t = (1,0)
      CHECK(std::abs(f.e1({s, M_PI})) <= 1e-12);      // top
      CHECK(std::abs(f.e2({0.0, s})) <= 1e-12);       // left: t = (0,1)
      CHECK(std::abs(f.e2({M_PI, s})) <= 1e-12);      // right
    }
  }
  CHECK_THROWS_AS(square_mode(0, 0), std::invalid_argument);
}
