#include "scoin/exactalg/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scoin::exact {

SparseVec make_sparse(const std::map<int, Rational>& entries) {
  SparseVec v;
  v.reserve(entries.size());
  for (const auto& [c, x] : entries) {
    if (!x.is_zero()) v.emplace_back(c, x);
  }
  return v;
}

namespace {

// w -= factor * row, on a map-backed working vector.
void axpy(std::map<int, Rational>& w, const Rational& factor, const SparseVec& row) {
  for (const auto& [c, x] : row) {
    auto [it, inserted] = w.try_emplace(c);
    it->second -= factor * x;
    if (it->second.is_zero()) w.erase(it);
  }
}

}  // namespace

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  std::map<int, Rational> w(v.begin(), v.end());
  auto it = w.begin();
  while (it != w.end()) {
    int col = it->first;
    auto pr = rows_.find(col);
    if (pr == rows_.end()) {
      ++it;
      continue;
    }
    Rational factor = it->second;
    axpy(w, factor, pr->second);
    // the pivot entry has been cancelled; rows only touch columns >= their pivot
    it = w.upper_bound(col);
  }
  return make_sparse(w);
}

bool RowEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  if (!lead.is_one()) {
    for (auto& [c, x] : r) x /= lead;
  }
  int pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<int> RowEchelon::pivot_columns() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [c, r] : rows_) p.push_back(c);
  return p;
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

QMatrix QMatrix::identity(int k) {
  QMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<Rational> QMatrix::row(int r) const {
  auto b = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return {b, b + cols_};
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += x * b.at(k, j);
    }
  }
  return m;
}

std::pair<QMatrix, std::vector<int>> QMatrix::rref() const {
  QMatrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i) {
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

int QMatrix::rank() const { return static_cast<int>(rref().second.size()); }

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
  auto [m, pivots] = rref();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[static_cast<std::size_t>(pivots[i])] = -m.at(static_cast<int>(i), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMatrix::solve: size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[static_cast<std::size_t>(i)];
  }
  auto [m, pivots] = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[static_cast<std::size_t>(pivots[i])] = m.at(static_cast<int>(i), cols_);
  }
  return x;
}

std::vector<int> QMatrix::independent_rows() const {
  RowEchelon e;
  std::vector<int> keep;
  for (int i = 0; i < rows_; ++i) {
    std::map<int, Rational> entries;
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) entries.emplace(j, at(i, j));
    }
    if (e.insert(make_sparse(entries))) keep.push_back(i);
  }
  return keep;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

QMatrix QMatrix::permute_rows(const std::vector<int>& perm) const {
  QMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(perm[static_cast<std::size_t>(i)], j);
  }
  return m;
}

QMatrix QMatrix::permute_cols(const std::vector<int>& perm) const {
  QMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, perm[static_cast<std::size_t>(j)]);
  }
  return m;
}

int SparseMatrix::rank() const {
  RowEchelon e;
  for (const auto& r : rows_) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> SparseMatrix::kernel_basis() const {
  RowEchelon e;
  for (const auto& r : rows_) e.insert(r);
  // back-substitute to reduced form: clear each pivot column from rows with smaller pivots
  std::map<int, std::map<int, Rational>> rows;
  for (const auto& [p, r] : e.rows()) rows.emplace(p, std::map<int, Rational>(r.begin(), r.end()));
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    int p = it->first;
    const auto& prow = it->second;
    for (auto jt = rows.begin(); jt != rows.end() && jt->first < p; ++jt) {
      auto f = jt->second.find(p);
      if (f == jt->second.end()) continue;
      Rational factor = f->second;
      for (const auto& [c, x] : prow) {
        auto [kt, ins] = jt->second.try_emplace(c);
        kt->second -= factor * x;
        if (kt->second.is_zero()) jt->second.erase(kt);
      }
    }
  }
  std::set<int> pivots;
  for (const auto& [p, r] : rows) pivots.insert(p);
  // column -> list of (pivot, coefficient) for the free-column expansion
  std::map<int, std::vector<std::pair<int, Rational>>> by_free;
  for (const auto& [p, r] : rows) {
    for (const auto& [c, x] : r) {
      if (c != p) by_free[c].emplace_back(p, x);
    }
  }
  std::vector<SparseVec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivots.count(f)) continue;
    std::map<int, Rational> v;
    v.emplace(f, Rational(1));
    if (auto it = by_free.find(f); it != by_free.end()) {
      for (const auto& [p, x] : it->second) v.emplace(p, -x);
    }
    basis.push_back(make_sparse(v));
  }
  return basis;
}

}  // namespace scoin::exact
