#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "scoin/exactalg/linalg.hpp"
#include "scoin/exactalg/mpoly.hpp"
#include "scoin/exactalg/poly_matrix.hpp"

using namespace scoin::exact;

namespace {

MPoly var(int nv, int i) { return MPoly::variable(nv, i); }

QMatrix random_qmatrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> zero(0, 2);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = zero(rng) == 0 ? Rational(0) : Rational(val(rng), 1 + zero(rng));
  return m;
}

MPoly random_poly(std::mt19937& rng, int nv, int terms, int maxdeg) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, maxdeg), v(0, nv - 1);
  MPoly p(nv);
  for (int t = 0; t < terms; ++t) {
    Exponent e;
    e.set(v(rng), d(rng));
    e.add(v(rng), d(rng));
    p.add_term(e, c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(7).to_int64() == 7);
  CHECK_THROWS(Rational(1, 3).to_int64());
}

TEST_CASE("polynomial arithmetic") {
  MPoly x = var(2, 0), y = var(2, 1);
  MPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(x.pow(3).derivative(0) == Rational(3) * x * x);
  CHECK(x.apply_as_operator(x * x) == Rational(2) * x);
  CHECK(p.to_string() == "x1^2 - x2^2");
  auto q = p.divide_exact(x + y);
  REQUIRE(q.has_value());
  CHECK(*q == x - y);
  CHECK_FALSE((x * x + y).divide_exact(x).has_value());
}

TEST_CASE("substitution") {
  MPoly y1 = var(8, 0), y2 = var(8, 1);
  MPoly p = y1 - y2;
  std::vector<MPoly> id{var(8, 0), var(8, 1), var(8, 2), var(8, 3), var(8, 4), var(8, 5), var(8, 6), var(8, 7)};
  CHECK(p.substitute(id) == p);
  std::vector<MPoly> zero(8, MPoly(8));
  MPoly r = p + MPoly::constant(8, 5);
  CHECK(r.substitute(zero) == MPoly::constant(8, 5));
  std::vector<MPoly> to_x = id;
  to_x[0] = var(8, 2);
  to_x[1] = var(8, 4);
  CHECK(p.substitute(to_x) == var(8, 2) - var(8, 4));
}

TEST_CASE("symmetric polynomial helpers") {
  std::vector<int> vars{0, 1, 2};
  MPoly e2 = elementary(3, vars, 2);
  CHECK(e2.size() == 3);
  MPoly h2 = complete_homogeneous(3, vars, 2);
  CHECK(h2.size() == 6);
  CHECK(elementary(3, vars, 4).is_zero());
  CHECK(elementary(3, vars, 0) == MPoly::constant(3, 1));
}

TEST_CASE("rank, kernel, solve") {
  CHECK(QMatrix::identity(5).rank() == 5);
  QMatrix m = QMatrix::from_rows({{1, 1}});
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  QMatrix a = QMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK(a.rank() == 1);
  CHECK_FALSE(a.solve({1, 1}).has_value());
  auto x = a.solve({3, 6});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + 2 * (*x)[1] == Rational(3));
  QMatrix b = QMatrix::from_rows({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK(b.independent_rows() == std::vector<int>{1, 3});
}

TEST_CASE("property: rank-nullity and permutation invariance (1000 cases)") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 6);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    int r = dim(rng), c = dim(rng);
    QMatrix m = random_qmatrix(rng, r, c);
    int rk = m.rank();
    auto ker = m.kernel_basis();
    if (rk + static_cast<int>(ker.size()) != c) ++failures;
    for (const auto& v : ker) {
      for (int i = 0; i < r; ++i) {
        Rational s = 0;
        for (int j = 0; j < c; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
        if (!s.is_zero()) ++failures;
      }
    }
    std::vector<int> pr(static_cast<std::size_t>(r)), pc(static_cast<std::size_t>(c));
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    if (m.permute_rows(pr).permute_cols(pc).rank() != rk) ++failures;
    // sparse path agrees with the dense one
    SparseMatrix s(c);
    for (int i = 0; i < r; ++i) {
      std::map<int, Rational> row;
      for (int j = 0; j < c; ++j)
        if (!m.at(i, j).is_zero()) row.emplace(j, m.at(i, j));
      s.add_row(make_sparse(row));
    }
    if (s.rank() != rk || static_cast<int>(s.kernel_basis().size()) != c - rk) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("row echelon membership") {
  RowEchelon e;
  CHECK(e.insert({{0, 1}, {2, 1}}));
  CHECK(e.insert({{1, 1}, {2, -1}}));
  CHECK_FALSE(e.insert({{0, 2}, {1, 3}, {2, -1}}));
  CHECK(e.contains({{0, 1}, {1, 1}}));
  CHECK(e.rank() == 2);
}

TEST_CASE("polynomial determinants") {
  int nv = 3;
  PolyMatrix d(3, 3, nv);
  for (int i = 0; i < 3; ++i) d.at(i, i) = var(nv, i) + MPoly::constant(nv, i);
  CHECK(d.det() == d.at(0, 0) * d.at(1, 1) * d.at(2, 2));
  PolyMatrix v(2, 2, 2);
  v.at(0, 0) = MPoly::constant(2, 1);
  v.at(0, 1) = var(2, 0);
  v.at(1, 0) = MPoly::constant(2, 1);
  v.at(1, 1) = var(2, 1);
  MPoly dv = v.det();
  CHECK((dv == var(2, 1) - var(2, 0) || dv == var(2, 0) - var(2, 1)));
  CHECK_THROWS_AS(PolyMatrix(2, 3, 1).det(), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative; Bareiss agrees with cofactor") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    PolyMatrix a(3, 3, 3), b(3, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a.at(i, j) = random_poly(rng, 3, 2, 2);
        b.at(i, j) = random_poly(rng, 3, 2, 2);
      }
    CHECK((a * b).det() == a.det() * b.det());
  }
  for (int t = 0; t < 5; ++t) {
    PolyMatrix a(5, 5, 2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a.at(i, j) = random_poly(rng, 2, 2, 1);
    CHECK(a.det_bareiss() == a.det_cofactor());
  }
}

TEST_CASE("lower unitriangular inverse") {
  PolyMatrix c = PolyMatrix::identity(3, 2);
  c.at(1, 0) = var(2, 0);
  c.at(2, 0) = var(2, 1);
  c.at(2, 1) = var(2, 0) * var(2, 1);
  PolyMatrix inv = c.inverse_lower_unitriangular();
  CHECK(c * inv == PolyMatrix::identity(3, 2));
  CHECK(inv * c == PolyMatrix::identity(3, 2));
}
