// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace mxe {

/// Column-major dense matrix (LAPACK layout).
struct DenseMatrix {
  int n_rows = 0, n_cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : n_rows(rows), n_cols(cols), data(std::size_t(rows) * cols, 0.0) {}

  double& operator()(int i, int j) { return data[std::size_t(j) * n_rows + i]; }
  double operator()(int i, int j) const { return data[std::size_t(j) * n_rows + i]; }
};

/// Symmetric sparse matrix: upper triangle (i <= j) in CSR with sorted columns.
/// All three form matrices share one pattern, so linear combinations are
/// entry-wise operations on the value arrays.
struct SymPattern {
  int n = 0;
  std::vector<int> row_ptr;  // size n+1
  std::vector<int> col;      // size nnz, j >= i within each row, sorted

  std::size_t nnz() const { return col.size(); }
};

struct SymMatrix {
  const SymPattern* pattern = nullptr;
  std::vector<double> val;

  int n() const { return pattern->n; }
  DenseMatrix to_dense() const;
  /// y = M x treating the stored upper triangle as a full symmetric matrix.
  void multiply(const std::vector<double>& x, std::vector<double>& y) const;
  double quadratic_form(const std::vector<double>& x) const;
  double frobenius_norm() const;
};

}  // namespace mxe
