// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "mxe/fespace.hpp"
#include "mxe/mesh.hpp"

namespace mxe {

struct ReferenceValue {
  double value = 0.0;
  int multiplicity = 1;
  std::string note;  // provenance of this particular value
};

/// Exact or literature eigenvalues of a benchmark domain, sorted ascending.
struct ReferenceSpectrum {
  DomainKind domain = DomainKind::square;
  enum class Provenance { exact, literature } provenance = Provenance::exact;
  std::vector<ReferenceValue> values;  // distinct values with multiplicities

  /// Values repeated by multiplicity, ascending.
  std::vector<double> expanded() const;
  /// k-th distinct value (1-based).
  double distinct(int k) const;
};

/// First eigenvalues of the square cavity: omega = sqrt(l^2 + m^2) over
/// nonnegative integer pairs (l,m) != (0,0), with multiplicity equal to the
/// number of ordered pairs attaining the value.  Whole multiplicity groups are
/// returned, so the expanded count may slightly exceed `count`.
ReferenceSpectrum square_exact(int count);

/// Embedded literature values for the non-trivial benchmark domains
/// (lshape, slit, square4).  These are high-precision references, not exact
/// ground truth.  Throws for the plain square (use square_exact).
ReferenceSpectrum literature_reference(DomainKind domain);

/// Analytic eigenfield of the square for the Neumann index pair (l,m),
/// normalized so H = cos(lx)cos(my):
///   E = ( -(m/w) cos(lx) sin(my), (l/w) sin(lx) cos(my) ),  w = sqrt(l^2+m^2).
/// Satisfies curl E = w H and curl H = w E with E.t = 0 on the boundary.
AnalyticField square_mode(int l, int m);

}  // namespace mxe
