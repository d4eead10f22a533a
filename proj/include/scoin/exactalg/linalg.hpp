#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scoin/exactalg/rational.hpp"

namespace scoin::exact {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec make_sparse(const std::map<int, Rational>& entries);

/// Incrementally maintained row-echelon basis of a subspace of Q^ncols.
/// Pivots are the leading (smallest) column of each stored row, normalized to 1;
/// the first nonzero entry is always the pivot, which makes results reproducible.
class RowEchelon {
 public:
  RowEchelon() = default;

  /// Residual of v after elimination against the stored rows (zero iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivot_columns() const;
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

/// Dense matrix of rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int k);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::vector<Rational> row(int r) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  /// Reduced row echelon form together with its pivot columns.
  std::pair<QMatrix, std::vector<int>> rref() const;
  int rank() const;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Rational>> kernel_basis() const;
  /// Some x with M x = b, or std::nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  /// Lexicographically first maximal set of linearly independent rows.
  std::vector<int> independent_rows() const;

  QMatrix transpose() const;
  QMatrix permute_rows(const std::vector<int>& perm) const;
  QMatrix permute_cols(const std::vector<int>& perm) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse-row matrix; kernel computations on operator images use this form.
class SparseMatrix {
 public:
  explicit SparseMatrix(int cols = 0) : cols_(cols) {}
  void add_row(SparseVec row) { rows_.push_back(std::move(row)); }
  int cols() const { return cols_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& row_list() const { return rows_; }

  int rank() const;
  /// Kernel of the linear map whose matrix has these rows (vectors in Q^cols).
  std::vector<SparseVec> kernel_basis() const;

 private:
  int cols_;
  std::vector<SparseVec> rows_;
};

}  // namespace scoin::exact
