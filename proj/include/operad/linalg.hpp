#pragma once

#include <map>
#include <vector>

#include "operad/errors.hpp"
#include "operad/exact.hpp"

namespace operad {

// A sparse vector with entries sorted by index, no zeros stored.
using sparse_vec = std::vector<std::pair<int, rational>>;

sparse_vec sparse_axpy(const sparse_vec& x, const rational& c, const sparse_vec& y);  // x + c*y

long resource_cap();  // entry cap, overridable via OPERAD_MAX_MATRIX_ENTRIES

// Incremental row-echelon keeper with least-index pivots.
class echelon {
 public:
  explicit echelon(long max_entries = resource_cap()) : cap_(max_entries) {}

  // Fully reduces v against the current pivot rows.
  sparse_vec reduce(sparse_vec v) const;

  // Reduces and, when nonzero, stores the monic row; returns true when the
  // rank grew.
  bool add(sparse_vec v);

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, sparse_vec>& rows() const { return rows_; }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

  // Back-substitutes so every stored row is fully reduced (RREF).
  void normalize();

 private:
  std::map<int, sparse_vec> rows_;  // pivot index -> monic row
  long cap_;
  long entries_ = 0;
};

// Column-wise elimination that tracks combinations: kernel vectors and
// particular solutions in terms of the original columns.
class column_solver {
 public:
  explicit column_solver(long max_entries = resource_cap()) : cap_(max_entries) {}

  // Appends a column; when it is dependent the combination (in RREF shape,
  // trailing coefficient 1 on this column) is recorded as a kernel vector.
  void add_column(int index, const sparse_vec& col);

  const std::vector<sparse_vec>& kernel() const { return kernel_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Solves sum_j x_j col_j = b; least-index-pivot particular solution.
  bool solve(const sparse_vec& b, sparse_vec& solution) const;

 private:
  struct prow {
    sparse_vec row;    // monic residual
    sparse_vec combo;  // combination of original columns producing it
  };
  std::map<int, prow> rows_;
  std::vector<sparse_vec> kernel_;
  long cap_;
  long entries_ = 0;
};

}  // namespace operad
