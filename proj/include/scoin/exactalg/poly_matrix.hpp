#pragma once

#include <span>
#include <vector>

#include "scoin/exactalg/mpoly.hpp"

namespace scoin::exact {

/// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int nvars);
  static PolyMatrix identity(int k, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  MPoly& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const MPoly& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Rows stacked below this matrix.
  PolyMatrix vstack(const PolyMatrix& below) const;
  PolyMatrix submatrix(std::span<const int> rowset, std::span<const int> colset) const;
  PolyMatrix substitute(std::span<const MPoly> images) const;

  /// Cofactor expansion up to 4x4, fraction-free Bareiss above. Throws on non-square input.
  MPoly det() const;
  MPoly minor(std::span<const int> rowset, std::span<const int> colset) const;
  /// Determinant by cofactor expansion regardless of size (reference implementation).
  MPoly det_cofactor() const;
  MPoly det_bareiss() const;

  bool is_lower_unitriangular() const;
  /// Inverse of a lower unitriangular matrix by forward substitution.
  PolyMatrix inverse_lower_unitriangular() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int nvars_ = 0;
  std::vector<MPoly> data_;
};

}  // namespace scoin::exact
