#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/combinatorics/json.hpp"
#include "scoin/core/errors.hpp"

using namespace scoin::comb;

namespace {

// Independent count of ordered set partitions of [n] with k blocks: surjective words [n] -> [k].
std::int64_t surjections(int n, int k) {
  std::int64_t total = 0;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  while (true) {
    std::set<int> used(w.begin(), w.end());
    if (static_cast<int>(used.size()) == k) ++total;
    int i = 0;
    while (i < n && ++w[static_cast<std::size_t>(i)] == k) w[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return total;
}

// Stirling numbers of the second kind by inclusion-exclusion.
std::int64_t stirling2(int n, int k) {
  std::int64_t s = 0;
  for (int j = 0; j <= k; ++j) {
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= j;
    s += ((k - j) % 2 ? -1 : 1) * binomial(k, j) * p;
  }
  return s / factorial(k);
}

// Hook length formula.
std::int64_t hook_count(const Partition& p) {
  Partition c = p.conjugate();
  std::int64_t num = factorial(p.size()), den = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) den *= (p.part(i) - j - 1) + (c.part(j) - i - 1) + 1;
  return num / den;
}

Subset S(int n, std::vector<int> e) { return Subset(n, std::move(e)); }

}  // namespace

TEST_CASE("gale order examples") {
  CHECK(gale_leq(S(3, {1, 3}), S(3, {2, 3})));
  CHECK_FALSE(gale_leq(S(3, {2, 3}), S(3, {1, 3})));
  CHECK(gale_leq(S(3, {2}), S(3, {2})));
  CHECK_THROWS_AS(gale_leq(S(3, {1}), S(3, {1, 2})), std::invalid_argument);
}

TEST_CASE("property: gale order is a partial order (1000 random triples)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> nd(1, 8);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = nd(rng);
    std::uniform_int_distribution<int> kd(0, n);
    int k = kd(rng);
    auto all = subsets_of_size(n, k);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const Subset &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
    if (!gale_leq(a, a)) ++failures;
    if (gale_leq(a, b) && gale_leq(b, a) && !(a == b)) ++failures;
    if (gale_leq(a, b) && gale_leq(b, c) && !gale_leq(a, c)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("staircases") {
  CHECK(staircase(S(8, {3, 6, 7})) == std::vector<int>{1, 2, 2, 3, 4, 4, 4, 5});
  CHECK(staircase(S(3, {})) == std::vector<int>{1, 2, 3});
  CHECK(staircase(S(3, {2, 3})) == std::vector<int>{1, 1, 1});
  CHECK(staircase(S(3, {1})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("J of a signed partition") {
  CHECK(j_of_signed({Partition({3, 3, 2}), {1, 2, 0}}) == S(8, {3, 5, 6}));
  CHECK(j_of_signed({Partition({2, 2}), {0, 0}}) == S(4, {}));
  CHECK(j_of_signed({Partition({4}), {4}}) == S(4, {1, 2, 3, 4}));
}

TEST_CASE("Artin monomials") {
  auto a = enumerate_artin(S(3, {3}));
  std::set<ExponentVec> got(a.begin(), a.end());
  CHECK(got == std::set<ExponentVec>{{0, 1, 1}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(enumerate_artin(S(3, {2, 3})) == std::vector<ExponentVec>{{0, 0, 0}});
  CHECK(enumerate_artin(S(3, {1, 2})).empty());
  // the n = 3 split 6/4/2/1 over J = {}, {3}, {2}, {2,3}
  CHECK(enumerate_artin(S(3, {})).size() == 6);
  CHECK(enumerate_artin(S(3, {2})).size() == 2);
}

TEST_CASE("signed Artin sets") {
  SignedPartition sp(Partition({3, 3, 2}), {1, 2, 0});
  CHECK(enumerate_signed_artin(sp).size() == 360);
  CHECK(count_signed_artin_product(sp) == 360);
  CHECK(count_signed_artin_via_I(sp) == 360);
  CHECK(count_I(3, 1, 0) == 2);
  CHECK(count_I(3, 2, 2) == 18);
  CHECK(count_I(2, 0, 3) == 10);
  CHECK(enumerate_signed_artin({Partition({3}), {0}}) == std::vector<ExponentVec>{{0, 1, 2}});
  CHECK(enumerate_signed_artin({Partition({3}), {3}}).empty());
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) CHECK(count_signed_artin_product({Partition({n}), {k}}) == binomial(n - 1, k));
}

TEST_CASE("signed Artin counts agree for every signed partition, n <= 8") {
  int checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& sp : signed_partitions_of(mu)) {
        auto e = static_cast<std::int64_t>(enumerate_signed_artin(sp).size());
        CHECK(e == count_signed_artin_product(sp));
        CHECK(e == count_signed_artin_via_I(sp));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("signed Artin sizes sum to batch-increasing OSP counts, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      std::int64_t total = 0;
      for (const auto& sp : signed_partitions_of(mu)) total += count_signed_artin_product(sp);
      OspConstraint c;
      c.batches = mu;
      CHECK(total == static_cast<std::int64_t>(enumerate_osp(n, c).size()));
    }
  }
}

TEST_CASE("q-Stirling numbers and the Hilbert series formula") {
  CHECK(q_stirling(2, 1) == QZPoly(1));
  CHECK(q_stirling(3, 2) == QZPoly(2) + QZPoly::q_power(1));
  for (int n = 0; n <= 6; ++n) CHECK(q_stirling(n, n) == QZPoly(1));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(q_stirling(n, k).eval(1, 0) == stirling2(n, k));
      CHECK(checked_mul(q_stirling(n, k).eval(1, 0), factorial(k)) == surjections(n, k));
    }
  QZPoly q = QZPoly::q_power(1), z = QZPoly::z_power(1);
  CHECK(fields1_formula(2) == QZPoly(1) + q + z);
  CHECK(fields1_formula(3) == QZPoly(1) + QZPoly(2) * q + QZPoly(2) * q * q + q * q * q +
                                  z * (QZPoly(2) + QZPoly(3) * q + q * q) + z * z);
  std::vector<std::int64_t> totals{1, 3, 13, 75, 541, 4683};
  for (int n = 1; n <= 6; ++n) {
    CHECK(fields1_formula(n).eval(1, 1) == totals[static_cast<std::size_t>(n - 1)]);
    CHECK(fields1_formula(n).eval(1, 1) == static_cast<std::int64_t>(enumerate_osp(n).size()));
  }
}

TEST_CASE("q-analogs") {
  CHECK(q_binomial(4, 2).eval(1, 0) == 6);
  CHECK(q_binomial(4, 2) == QZPoly(1) + QZPoly::q_power(1) + QZPoly(2) * QZPoly::q_power(2) +
                               QZPoly::q_power(3) + QZPoly::q_power(4));
  CHECK(q_factorial(3).eval(1, 0) == 6);
  CHECK(q_binomial(2, 3).is_zero());
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("ordered set partitions") {
  CHECK(enumerate_osp(2).size() == 3);
  OspConstraint c;
  c.batches = Partition({3});
  auto b = enumerate_osp(3, c);
  std::set<std::string> got;
  for (const auto& s : b) got.insert(s.to_string());
  CHECK(got == std::set<std::string>{"(1,2,3)", "(1 | 2,3)", "(1,2 | 3)", "(1 | 2 | 3)"});
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      auto count = [](int nn, int kk) {
        OspConstraint cc;
        cc.k = kk;
        return static_cast<std::int64_t>(enumerate_osp(nn, cc).size());
      };
      CHECK(count(n, k) == k * (count(n - 1, k - 1) + count(n - 1, k)));
      CHECK(count(n, k) == surjections(n, k));
    }
  OspConstraint sz;
  sz.sizes = std::vector<int>{2, 1};
  CHECK(enumerate_osp(3, sz).size() == 3);
  CHECK_THROWS_AS(enumerate_osp(9), scoin::ResourceError);
}

TEST_CASE("ordered multiset partitions and statistics") {
  auto one = enumerate_omp(2, 1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks == Blocks{{1, 2}});
  for (auto s : {OmpStat::inv, OmpStat::maj, OmpStat::dinv, OmpStat::minimaj}) CHECK(omp_statistic(one[0], s) == 0);
  OrderedMultisetPartition m(Blocks{{2, 3}, {1}});
  CHECK(omp_statistic(m, OmpStat::inv) == 2);
  CHECK(parse_omp_stat("dinv") == OmpStat::dinv);
  CHECK_THROWS_AS(parse_omp_stat("foo"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedMultisetPartition(Blocks{{1, 1}}), std::invalid_argument);
}

TEST_CASE("OMP statistics are equidistributed, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::map<OmpStat, std::map<std::vector<int>, QZPoly>> gf;
      for (const auto& m : enumerate_omp(n, k, n)) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& b : m.blocks)
          for (int x : b) ++content[static_cast<std::size_t>(x - 1)];
        if (!std::is_sorted(content.rbegin(), content.rend())) continue;
        for (auto s : {OmpStat::inv, OmpStat::maj, OmpStat::dinv, OmpStat::minimaj})
          gf[s][content] += QZPoly::q_power(omp_statistic(m, s));
      }
      CHECK(gf[OmpStat::inv] == gf[OmpStat::maj]);
      CHECK(gf[OmpStat::inv] == gf[OmpStat::dinv]);
      CHECK(gf[OmpStat::inv] == gf[OmpStat::minimaj]);
    }
  }
}

TEST_CASE("standard tableaux") {
  StandardTableau t(Partition({4, 2, 2}), {{1, 2, 4, 8}, {3, 6}, {5, 7}});
  CHECK(t.descents() == std::vector<int>{2, 4, 6});
  CHECK(t.des() == 3);
  CHECK(t.maj() == 12);
  for (int n = 1; n <= 6; ++n) {
    auto row = enumerate_syt(Partition({n}));
    REQUIRE(row.size() == 1);
    CHECK(row[0].maj() == 0);
    auto col = enumerate_syt(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    REQUIRE(col.size() == 1);
    CHECK(col[0].maj() == n * (n - 1) / 2);
    for (const auto& p : partitions_of(n)) CHECK(static_cast<std::int64_t>(enumerate_syt(p).size()) == hook_count(p));
  }
  CHECK_THROWS_AS(StandardTableau(Partition({2}), {{2, 1}}), std::invalid_argument);
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  for (int n = 1; n <= 6; ++n) {
    auto ps = partitions_of(n);
    Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& l : ps) {
      CHECK(kostka(l, l) == 1);
      CHECK(kostka(l, ones) == hook_count(l));
      for (const auto& m : ps)
        if (!l.dominates(m)) CHECK(kostka(l, m) == 0);
    }
  }
}

TEST_CASE("L and I counts agree with enumeration, m <= 8, t <= 5") {
  CHECK(count_L(5, 2, 2) == 150);
  CHECK(count_I(5, 2, 2) == 150);
  CHECK(count_L(2, 1, 0) == 1);
  CHECK(elevated_staircase(5, 2, 2) == ExponentVec{2, 3, 4, 4, 4});
  for (int m = 1; m <= 8; ++m)
    for (int k = 0; k <= m; ++k)
      for (int t = 0; t <= 5; ++t) {
        auto l = count_L(m, k, t);
        CHECK(l == count_I(m, k, t));
        CHECK(l == static_cast<std::int64_t>(enumerate_L_pairs(m, k, t).size()));
        CHECK(l == static_cast<std::int64_t>(enumerate_I(m, k, t).size()));
        if (t == 0) CHECK(l == binomial(m - 1, k));
      }
}

TEST_CASE("translation sequences") {
  auto ts = translation_sequences_of(Partition({2, 1}));
  CHECK(ts.size() == 8);
  TranslationSequence t(Partition({3, 3, 2}), {S(8, {2}), S(8, {4, 6}), S(8, {})});
  CHECK(t.gamma() == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(TranslationSequence(Partition({2, 1}), {S(3, {3}), S(3, {})}), std::invalid_argument);
}

TEST_CASE("permutations and parabolic subgroups") {
  CHECK(all_permutations(4).size() == 24);
  CHECK(parabolic_subgroup(Partition({2, 2})).size() == 4);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(compose({1, 0, 2}, {0, 2, 1}) == Permutation{1, 2, 0});
}

TEST_CASE("JSON round trips") {
  nlohmann::json j = SignedPartition(Partition({3, 3, 2}), {1, 2, 0});
  CHECK(j.get<SignedPartition>() == SignedPartition(Partition({3, 3, 2}), {1, 2, 0}));
  QZPoly p = fields1_formula(3);
  nlohmann::json jp = p;
  CHECK(jp.get<QZPoly>() == p);
  nlohmann::json jt = StandardTableau(Partition({2, 1}), {{1, 2}, {3}});
  CHECK(jt.get<StandardTableau>().maj() == 2);
  nlohmann::json jo = OrderedSetPartition(Blocks{{2}, {1, 3}});
  CHECK(jo.get<OrderedSetPartition>().k() == 2);
}
