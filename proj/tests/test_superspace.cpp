#include <doctest.h>

#include "scoin/superspace/element.hpp"
#include "scoin/superspace/json.hpp"
#include "support/random_elements.hpp"

using namespace scoin::super;
using scoin::comb::Partition;
using scoin::comb::Subset;
using scoin::testing::random_element;
using scoin::testing::random_permutation;

namespace {

SuperElement th(int n, int i) { return SuperElement::theta(n, i); }
SuperElement X(int n, int i) { return SuperElement::x(n, i); }
SuperElement one(int n) { return SuperElement::constant(n, 1); }

bool equal_up_to_sign(const SuperElement& a, const SuperElement& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("theta products anticommute") {
  CHECK(th(2, 1) * th(2, 2) == SuperElement::parse(2, "t1*t2"));
  CHECK(th(2, 2) * th(2, 1) == SuperElement::parse(2, "-t1*t2"));
  CHECK((th(2, 1) * th(2, 1)).is_zero());
  CHECK(koszul_sign(0b10, 0b01) == -1);
  CHECK(koszul_sign(0b01, 0b10) == 1);
  CHECK(koszul_sign(0b11, 0b01) == 0);
}

TEST_CASE("graded commutativity, associativity, bilinearity") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 4;
    int ff = static_cast<int>(rng() % 3), fg = static_cast<int>(rng() % 3);
    auto f = random_element(rng, n, 3, 2, 1, std::min(ff, n));
    auto g = random_element(rng, n, 3, 2, 1, std::min(fg, n));
    auto h = random_element(rng, n, 3, 2);
    int s = (std::min(ff, n) * std::min(fg, n)) % 2 ? -1 : 1;
    CHECK(f * g == Rational(s) * (g * f));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("symmetric group action") {
  for (int n = 1; n <= 4; ++n) {
    auto d = vandermonde(n);
    for (const auto& w : scoin::comb::all_permutations(n))
      CHECK(act(w, d) == Rational(scoin::comb::permutation_sign(w)) * d);
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 4;
    auto f = random_element(rng, n, 4, 3);
    auto u = random_permutation(rng, n), w = random_permutation(rng, n);
    scoin::comb::Permutation id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    CHECK(act(id, f) == f);
    CHECK(act(scoin::comb::compose(u, w), f) == act(u, act(w, f)));
    for (int j = 1; j <= 2; ++j) CHECK(euler_d(j, act(w, f)) == act(w, euler_d(j, f)));
  }
  // theta_1 theta_2 under the transposition becomes theta_2 theta_1
  CHECK(act({1, 0}, th(2, 1) * th(2, 2)) == -(th(2, 1) * th(2, 2)));
}

TEST_CASE("contractions") {
  auto t12 = th(2, 1) * th(2, 2);
  CHECK(contract_theta(2, t12) == -th(2, 1));
  CHECK(contract_theta(1, t12) == th(2, 2));
  CHECK(contract_theta(1, th(2, 2)).is_zero());
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 3;
    auto f = random_element(rng, n, 4, 2);
    std::uniform_int_distribution<int> v(1, n);
    int i = v(rng), j = v(rng);
    CHECK(contract_theta(i, contract_theta(j, f)) == -contract_theta(j, contract_theta(i, f)));
    CHECK(partial_x(i, contract_theta(j, f)) == contract_theta(j, partial_x(i, f)));
  }
}

TEST_CASE("odot action") {
  CHECK(odot(X(1, 1), X(1, 1) * X(1, 1)) == Rational(2) * X(1, 1));
  auto t12 = th(2, 1) * th(2, 2);
  CHECK(odot(t12, t12) == SuperElement::constant(2, -1));
  for (int n = 1; n <= 5; ++n) {
    auto d = vandermonde(n);
    for (int k = 1; k <= n; ++k) CHECK(odot(elementary(n, k), d).is_zero());
    for (const auto& g : coinvariant_generators(n)) CHECK(odot(g, d).is_zero());
  }
  // operator composition: (fg) acts as f o g for any f, g
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 3;
    auto f = random_element(rng, n, 2, 1);
    auto g = random_element(rng, n, 2, 1);
    auto h = random_element(rng, n, 5, 4, -1, -1);
    CHECK(odot(f * g, h) == odot(f, odot(g, h)));
  }
}

TEST_CASE("Euler operators") {
  CHECK(euler_d(1, X(1, 1)) == th(1, 1));
  CHECK(euler_d(1, vandermonde(2)) == th(2, 1) - th(2, 2));
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 4;
    auto f = random_element(rng, n, 4, 4);
    for (int j = 1; j <= 3; ++j) CHECK(euler_d(j, euler_d(j, f)).is_zero());
  }
  std::vector<int> ks{2, 1};
  auto f = X(2, 1) * X(2, 1) * X(2, 2);
  CHECK(euler_chain(ks, f) == euler_d(2, euler_d(1, f)));
}

TEST_CASE("antisymmetrizers") {
  std::mt19937 rng(31);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 4;
    auto f = random_element(rng, n, 3, 3);
    CHECK(antisymmetrize(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), f) == f);
  }
  auto f = random_element(rng, 3, 3, 3);
  Partition mu({2, 1});
  CHECK(antisymmetrize(mu, antisymmetrize(mu, f)) == Rational(2) * antisymmetrize(mu, f));
  for (int n = 1; n <= 4; ++n) {
    SuperMonomial m;
    for (int i = 0; i < n; ++i) m.exps.set(i, n - 1 - i);
    CHECK(antisymmetrize(Partition({n}), SuperElement::monomial(n, m)) == vandermonde(n));
  }
}

TEST_CASE("invariant operators commute with antisymmetrizers") {
  std::mt19937 rng(37);
  Partition mu({2, 2});
  auto e2 = elementary(4, 2);
  // x1 + x2 and x3*x4 are invariant under the parabolic of (2,2)
  auto inv = X(4, 1) + X(4, 2);
  auto inv2 = X(4, 3) * X(4, 4);
  for (int t = 0; t < 20; ++t) {
    auto g = random_element(rng, 4, 3, 4);
    for (const auto& f : {e2, inv, inv2}) CHECK(odot(f, antisymmetrize(mu, g)) == antisymmetrize(mu, odot(f, g)));
  }
}

TEST_CASE("distinguished elements") {
  CHECK(vandermonde(2) == X(2, 1) - X(2, 2));
  CHECK(f_J(Subset(3, {})) == one(3));
  CHECK(f_J(Subset(2, {1})) == X(2, 1) * (X(2, 1) - X(2, 2)));
  for (int n = 1; n <= 5; ++n) {
    CHECK(equal_up_to_sign(super_vandermonde(n, n), vandermonde(n)));
    for (int k = 1; k <= n; ++k) {
      auto d = super_vandermonde(n, k);
      REQUIRE_FALSE(d.is_zero());
      CHECK(d.is_bihomogeneous());
      CHECK(d.bidegree().second == n - k);
    }
  }
  auto gens = coinvariant_generators(3);
  REQUIRE(gens.size() == 6);
  CHECK(gens[3] == th(3, 1) + th(3, 2) + th(3, 3));
  // f_J for 1 in J lies in the coinvariant ideal, so it kills the Vandermonde
  for (int n = 2; n <= 4; ++n)
    for (const auto& J : scoin::comb::all_subsets(n))
      CHECK(odot(f_J(J), vandermonde(n)).is_zero() == J.contains(1));
}

TEST_CASE("text and JSON round trips") {
  auto f = SuperElement::parse(4, "3*x1^2*x3*t2*t4 - 1/2*t1 + x4");
  CHECK(f.size() == 3);
  CHECK(SuperElement::parse(4, f.to_string()) == f);
  CHECK(SuperElement::parse(3, "t2*t1") == SuperElement::parse(3, "-t1*t2"));
  CHECK(SuperElement::parse(2, "0").is_zero());
  CHECK_THROWS_AS(SuperElement::parse(2, "x3"), std::invalid_argument);
  CHECK_THROWS_AS(SuperElement::parse(2, "t1^2"), std::invalid_argument);
  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    auto g = random_element(rng, 4, 5, 4);
    CHECK(SuperElement::parse(4, g.to_string()) == g);
    nlohmann::json j = g;
    CHECK(j.get<SuperElement>() == g);
  }
}
