#include <doctest.h>

#include "scoin/symfunc/json.hpp"
#include "scoin/symfunc/symfn.hpp"

using namespace scoin::sym;
using scoin::comb::OmpStat;
using scoin::comb::partitions_of;

namespace {

Partition P(std::vector<int> p) { return Partition(std::move(p)); }
Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
SymFn s(std::vector<int> p, const QZPoly& c = 1) { return SymFn::basis_element(Basis::s, P(std::move(p)), c); }
const QZPoly q = QZPoly::q_power(1);

}  // namespace

TEST_CASE("change of basis") {
  for (int n = 1; n <= 6; ++n) {
    SymFn hn = to_basis(s({n}), Basis::m);
    CHECK(hn.coeffs().size() == partitions_of(n).size());
    for (const auto& [l, c] : hn.coeffs()) CHECK(c == QZPoly(1));
    SymFn e1n = to_basis(SymFn::basis_element(Basis::e, ones(n)), Basis::m);
    CHECK(e1n.coefficient(ones(n)) == QZPoly(scoin::comb::factorial(n)));
    for (const auto& mu : partitions_of(n)) {
      SymFn e = to_basis(SymFn::basis_element(Basis::e, mu), Basis::m);
      for (const auto& l : partitions_of(n)) CHECK(e.coefficient(l) == QZPoly(e_to_m_coefficient(mu, l)));
      SymFn f = SymFn::basis_element(Basis::s, mu, QZPoly(1) + q);
      CHECK(to_basis(to_basis(f, Basis::m), Basis::s).coeffs() == f.coeffs());
      CHECK(to_basis(to_basis(f, Basis::e), Basis::s).coeffs() == f.coeffs());
      CHECK(to_basis(to_basis(to_basis(f, Basis::m), Basis::e), Basis::m) == to_basis(f, Basis::m));
    }
  }
}

TEST_CASE("Kostka matrix is unitriangular in dominance order") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(kostka_cached(l, l) == 1);
      for (const auto& m : partitions_of(n))
        if (kostka_cached(l, m) != 0) CHECK(l.dominates(m));
    }
  }
}

TEST_CASE("Hall inner product and perp operators") {
  auto parts = partitions_of(5);
  for (const auto& l : parts) {
    for (const auto& m : parts) {
      CHECK(hall(SymFn::basis_element(Basis::s, l), SymFn::basis_element(Basis::s, m)) == QZPoly(l == m ? 1 : 0));
      CHECK(hall(SymFn::basis_element(Basis::s, l), SymFn::basis_element(Basis::e, m)) ==
            QZPoly(scoin::comb::kostka(l.conjugate(), m)));
    }
  }
  for (int n = 1; n <= 5; ++n) CHECK(e_perp(P({n}), SymFn::basis_element(Basis::s, ones(n))) == QZPoly(1));
  CHECK(e1_perp(s({2})) == s({1}));
  CHECK(e1_perp(s({2, 1})) == s({2}) + s({1, 1}));
  CHECK(e1_perp(s({2, 2})).coeffs().size() == 1);
}

TEST_CASE("omega") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(omega(s({n})) == SymFn::basis_element(Basis::s, ones(n)));
    CHECK(omega(SymFn::basis_element(Basis::e, P({n}))) == s({n}));
    for (const auto& l : partitions_of(n)) {
      SymFn f = SymFn::basis_element(Basis::m, l, q);
      CHECK(omega(omega(f)) == f);
    }
  }
}

TEST_CASE("C_{n,k} from standard tableaux") {
  CHECK(cnk_syt(2, 2) == s({2}) + s({1, 1}, q));
  for (int n = 1; n <= 6; ++n) {
    CHECK(cnk_syt(n, 1) == SymFn::basis_element(Basis::s, ones(n)));
    SymFn graded(n, Basis::s);
    for (const auto& t : scoin::comb::enumerate_syt(n)) graded.add(t.shape, QZPoly::q_power(t.maj()));
    CHECK(cnk_syt(n, n) == graded);
    for (int k = 1; k <= n; ++k) {
      auto c = cnk_syt(n, k);
      for (const auto& [l, v] : c.coeffs()) CHECK(v.nonnegative());
      CHECK(c.at_q1() == osp_sign_module(n, k));
    }
  }
}

TEST_CASE("Reiner recursion, 2 <= n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      SymFn rhs(n - 1, Basis::s);
      if (k - 1 >= 1) rhs += cnk_syt(n - 1, k - 1);
      if (k <= n - 1) rhs += cnk_syt(n - 1, k);
      CHECK(e1_perp(cnk_syt(n, k)) == scoin::comb::q_integer(k) * rhs);
    }
  }
}

TEST_CASE("C_{n,k} from ordered multiset partitions matches, n <= 6") {
  CHECK(cnk_omp(2, 1, OmpStat::inv) == SymFn::basis_element(Basis::e, P({2})));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      auto target = cnk_syt(n, k);
      for (auto st : {OmpStat::inv, OmpStat::maj, OmpStat::dinv, OmpStat::minimaj}) CHECK(cnk_omp(n, k, st) == target);
    }
}

TEST_CASE("Schur polynomials") {
  CHECK(schur_poly(P({1}), 6, {2}) == scoin::exact::MPoly::variable(6, 2));
  CHECK(schur_poly(P({1, 1}), 6, {4, 5}) == scoin::exact::MPoly::variable(6, 4) * scoin::exact::MPoly::variable(6, 5));
  CHECK(schur_poly(P({2, 1, 1}), 6, {2, 3, 4}) == schur_poly_bialternant(P({2, 1, 1}), 6, {2, 3, 4}));
  for (int N = 1; N <= 4; ++N) {
    std::vector<int> vars;
    for (int i = 0; i < N; ++i) vars.push_back(i);
    for (int d = 0; d <= 4; ++d)
      for (const auto& nu : partitions_of(d))
        if (nu.length() <= N) CHECK(schur_poly(nu, N, vars) == schur_poly_bialternant(nu, N, vars));
  }
  CHECK(schur_poly(P({1, 1, 1}), 3, {0, 1}).is_zero());
}

TEST_CASE("emitters") {
  SymFn f = s({2}) + s({1, 1}, q);
  nlohmann::json j = f;
  CHECK(j.get<SymFn>() == f);
  CHECK(f.to_latex() == "s_{2} + s_{11} \\cdot (q)");
  CHECK(f.to_string() == "s_{2} + s_{11}*(q)");
}
