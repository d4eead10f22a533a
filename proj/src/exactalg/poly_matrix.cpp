#include "scoin/exactalg/poly_matrix.hpp"

#include <stdexcept>

namespace scoin::exact {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars) : rows_(rows), cols_(cols), nvars_(nvars) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), MPoly(nvars));
}

PolyMatrix PolyMatrix::identity(int k, int nvars) {
  PolyMatrix m(k, k, nvars);
  for (int i = 0; i < k; ++i) m.at(i, i) = MPoly::constant(nvars, 1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
  PolyMatrix m(a.rows_, b.cols_, a.nvars_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const MPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("PolyMatrix::vstack: column mismatch");
  PolyMatrix m(rows_ + below.rows_, cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j).with_nvars(nvars_);
  return m;
}

PolyMatrix PolyMatrix::submatrix(std::span<const int> rowset, std::span<const int> colset) const {
  PolyMatrix m(static_cast<int>(rowset.size()), static_cast<int>(colset.size()), nvars_);
  for (std::size_t i = 0; i < rowset.size(); ++i) {
    for (std::size_t j = 0; j < colset.size(); ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = at(rowset[i], colset[j]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::substitute(std::span<const MPoly> images) const {
  int nv = images.empty() ? nvars_ : images.front().nvars();
  PolyMatrix m(rows_, cols_, nv);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].substitute(images);
  return m;
}

MPoly PolyMatrix::det_cofactor() const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: matrix is not square");
  if (rows_ == 0) return MPoly::constant(nvars_, 1);
  if (rows_ == 1) return at(0, 0);
  if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  // expand along the first row
  MPoly total(nvars_);
  std::vector<int> rest_rows;
  for (int i = 1; i < rows_; ++i) rest_rows.push_back(i);
  for (int j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    std::vector<int> rest_cols;
    for (int c = 0; c < cols_; ++c)
      if (c != j) rest_cols.push_back(c);
    MPoly term = at(0, j) * submatrix(rest_rows, rest_cols).det_cofactor();
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

MPoly PolyMatrix::det_bareiss() const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: matrix is not square");
  int n = rows_;
  if (n == 0) return MPoly::constant(nvars_, 1);
  std::vector<MPoly> a = data_;
  auto A = [&](int i, int j) -> MPoly& { return a[static_cast<std::size_t>(i * n + j)]; };
  bool negate = false;
  MPoly prev = MPoly::constant(nvars_, 1);
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!A(i, k).is_zero()) {
          p = i;
          break;
        }
      }
      if (p < 0) return MPoly(nvars_);
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("PolyMatrix::det_bareiss: inexact division");
        A(i, j) = std::move(*q);
      }
      A(i, k) = MPoly(nvars_);
    }
    prev = A(k, k);
  }
  MPoly d = A(n - 1, n - 1);
  return negate ? -d : d;
}

MPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: matrix is not square");
  return rows_ <= 4 ? det_cofactor() : det_bareiss();
}

MPoly PolyMatrix::minor(std::span<const int> rowset, std::span<const int> colset) const {
  if (rowset.size() != colset.size()) throw std::invalid_argument("PolyMatrix::minor: non-square selection");
  return submatrix(rowset, colset).det();
}

bool PolyMatrix::is_lower_unitriangular() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      const MPoly& x = at(i, j);
      if (i == j ? !(x.is_constant() && x.coefficient(Exponent()).is_one()) : !x.is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::inverse_lower_unitriangular() const {
  if (!is_lower_unitriangular()) throw std::invalid_argument("PolyMatrix: not lower unitriangular");
  int n = rows_;
  PolyMatrix inv = identity(n, nvars_);
  // column by column: inv(i,j) = -sum_{j<=k<i} at(i,k) inv(k,j)
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      MPoly s(nvars_);
      for (int k = j; k < i; ++k) {
        if (!at(i, k).is_zero() && !inv.at(k, j).is_zero()) s += at(i, k) * inv.at(k, j);
      }
      inv.at(i, j) = -s;
    }
  }
  return inv;
}

}  // namespace scoin::exact
