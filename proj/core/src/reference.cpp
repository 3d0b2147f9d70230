// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/reference.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mxe {

std::vector<double> ReferenceSpectrum::expanded() const {
  std::vector<double> out;
  for (const auto& v : values)
    for (int k = 0; k < v.multiplicity; ++k) out.push_back(v.value);
  return out;
}

double ReferenceSpectrum::distinct(int k) const {
  if (k < 1 || k > static_cast<int>(values.size()))
    throw std::invalid_argument("ReferenceSpectrum: distinct index out of range");
  return values[k - 1].value;
}

ReferenceSpectrum square_exact(int count) {
  if (count < 1) throw std::invalid_argument("square_exact: count must be >= 1");
  ReferenceSpectrum spec;
  spec.domain = DomainKind::square;
  spec.provenance = ReferenceSpectrum::Provenance::exact;

  // Values <= V are complete once l,m run to V; grow V until enough values.
  for (int cap = 4;; cap *= 2) {
    std::map<int, int> mult;  // l^2 + m^2 -> ordered-pair count
    for (int l = 0; l <= cap; ++l)
      for (int m = 0; m <= cap; ++m) {
        if (l == 0 && m == 0) continue;
        const int k = l * l + m * m;
        if (k <= cap * cap) mult[k] += 1;
      }
    spec.values.clear();
    int total = 0;
    for (const auto& [k, m] : mult) {
      spec.values.push_back({std::sqrt(static_cast<double>(k)), m,
                             "exact: sqrt(" + std::to_string(k) + ")"});
      total += m;
      if (total >= count) return spec;
    }
    if (cap > 8 * count + 64) throw std::logic_error("square_exact: enumeration failed");
  }
}

ReferenceSpectrum literature_reference(DomainKind domain) {
  ReferenceSpectrum spec;
  spec.domain = domain;
  spec.provenance = ReferenceSpectrum::Provenance::literature;
  const std::string dauge = "Dauge benchmark corpus";
  switch (domain) {
    case DomainKind::lshape:
      spec.values = {
          {0.773334985176, 1, dauge},
          {1.19678275574, 1, dauge},
          {2.0, 2, "exact: glued eigenfunctions of the quarter square"},
          {2.14848368266, 1, dauge},
      };
      return spec;
    case DomainKind::slit:
      spec.values = {
          {0.647375015, 1, dauge},
          {1.0, 1, "exact: cos(x) mode survives the slit"},
          {1.280686161, 1, dauge},
          {2.0, 2, "exact: quarter-square modes"},
          {2.096486081, 1, dauge},
          {2.229523505, 1, dauge},
      };
      return spec;
    case DomainKind::square4:
      spec.values = {
          {1.15954813181, 1, dauge}, {1.16804100636, 1, dauge}, {1.5834295853, 1, dauge},
          {2.3757369919, 1, dauge},  {2.4724291674, 1, dauge},  {2.5288205712, 1, dauge},
          {2.7487894882, 1, dauge},  {3.2334726763, 1, dauge},  {3.47832176265, 1, dauge},
          {3.51802898831, 1, dauge},
      };
      return spec;
    case DomainKind::square:
      throw std::invalid_argument("literature_reference: the square has an exact spectrum");
  }
  throw std::invalid_argument("literature_reference: unknown domain");
}

AnalyticField square_mode(int l, int m) {
  if (l < 0 || m < 0 || (l == 0 && m == 0))
    throw std::invalid_argument("square_mode: need nonnegative (l,m) != (0,0)");
  const double w = std::sqrt(static_cast<double>(l * l + m * m));
  AnalyticField f;
  f.e1 = [l, m, w](Point2 p) { return -(m / w) * std::cos(l * p.x) * std::sin(m * p.y); };
  f.e2 = [l, m, w](Point2 p) { return (l / w) * std::sin(l * p.x) * std::cos(m * p.y); };
  f.h = [l, m](Point2 p) { return std::cos(l * p.x) * std::cos(m * p.y); };
  f.curl_e = [l, m, w](Point2 p) { return w * std::cos(l * p.x) * std::cos(m * p.y); };
  f.curl_h = [l, m, w](Point2 p) {
    return Point2{-m * std::cos(l * p.x) * std::sin(m * p.y),
                  l * std::sin(l * p.x) * std::cos(m * p.y)};
  };
  return f;
}

}  // namespace mxe
