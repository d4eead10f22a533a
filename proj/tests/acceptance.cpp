// One line per acceptance criterion; exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/harness/checks.hpp"
#include "scoin/harness/properties.hpp"
#include "scoin/symfunc/symfn.hpp"

using namespace scoin;
using comb::Partition;
using comb::QZPoly;
using comb::Subset;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Runs a harness check for n = lo..hi and reports the first non-pass.
void checks_range(Outcome& o, const std::string& name, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    const auto r = harness::run({name, n, {}});
    if (r.status != harness::Status::pass)
      o.fail(name + " n=" + std::to_string(n) + " " + harness::to_string(r.status) +
             (r.witnesses.empty() ? (r.notes.empty() ? "" : ": " + r.notes.front()) : ": " + r.witnesses.front()));
  }
}

QZPoly qz(int q, int z) { return QZPoly::monomial(q, z); }

Outcome fields1() {
  Outcome o;
  checks_range(o, "fields1", 1, 5);
  const std::int64_t osp[] = {1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n)
    if (coinv::quotient_hilbert(coinv::IdealSpec::superspace_coinvariant(n)).total() != osp[n - 1])
      o.fail("dim SR_" + std::to_string(n) + " != " + std::to_string(osp[n - 1]));
  return o;
}

Outcome fields2() {
  Outcome o;
  checks_range(o, "fields2", 1, 4);
  return o;
}

Outcome fields3() {
  Outcome o;
  checks_range(o, "fields3", 1, 4);
  const auto f2 = coinv::frobenius_reconstruct(2).total();
  const auto expect2 = sym::SymFn::basis_element(sym::Basis::s, Partition({2})) +
                       sym::SymFn::basis_element(sym::Basis::s, Partition({1, 1}), qz(1, 0) + qz(0, 1));
  if (!(f2 == expect2)) o.fail("n=2 table is " + f2.to_string());
  const auto c111 = coinv::frobenius_reconstruct(3).total().coefficient(Partition({1, 1, 1}));
  if (!(c111 == qz(3, 0) + qz(1, 1) + qz(2, 1) + qz(0, 2))) o.fail("n=3 coefficient of s111 is " + c111.to_string());
  return o;
}

Outcome reiner() {
  Outcome o;
  checks_range(o, "reiner", 2, 6);
  return o;
}

Outcome artin_colon() {
  Outcome o;
  checks_range(o, "artin", 1, 5);
  checks_range(o, "colon", 1, 5);
  const std::pair<Subset, std::size_t> split[] = {
      {Subset(3, {}), 6}, {Subset(3, {3}), 4}, {Subset(3, {2}), 2}, {Subset(3, {2, 3}), 1}};
  for (const auto& [J, size] : split)
    if (comb::enumerate_artin(J).size() != size) o.fail("#A_3(" + J.to_string() + ") != " + std::to_string(size));
  for (const auto& J : comb::all_subsets(3))
    if (J.contains(1) && !comb::enumerate_artin(J).empty()) o.fail("A_3(" + J.to_string() + ") is not empty");
  return o;
}

// The parabolic check also verifies the (3,3,2), (1,2,0) chain 360 = 2*18*10.
Outcome parabolic() {
  Outcome o;
  checks_range(o, "parabolic", 1, 4);
  return o;
}

// dop-leading covers parts (a) and (c); dop-gale covers (b) and the worked P_{T,356} example.
Outcome doperators() {
  Outcome o;
  checks_range(o, "dop-leading", 1, 4);
  checks_range(o, "dop-gale", 1, 4);
  return o;
}

// n = 8 runs m <= 8, k <= m, t <= 5 and includes (5,2,2) -> 150 with bound (2,3,4,4,4).
Outcome counting() {
  Outcome o;
  checks_range(o, "counting", 8, 8);
  return o;
}

Outcome omp() {
  Outcome o;
  checks_range(o, "omp-stats", 1, 6);
  return o;
}

Outcome closure() {
  Outcome o;
  checks_range(o, "operator-closure", 1, 4);
  return o;
}

Outcome properties() {
  Outcome o;
  for (const auto& r : harness::run_property_suites(20240611, 1000, 4)) {
    if (r.cases != 1000) o.fail(r.name + " ran " + std::to_string(r.cases) + " cases");
    if (r.failures) o.fail(r.name + ": " + std::to_string(r.failures) + " failures" + (r.witnesses.empty() ? "" : ", " + r.witnesses.front()));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fields 1: Hilbert series of SR_n, n = 1..5", fields1},
      {"Fields 2: eps_mu dimensions against batch-increasing OSPs, n = 1..4", fields2},
      {"Fields 3: graded Frobenius image, n = 1..4, with the n = 2, 3 spot values", fields3},
      {"Reiner recursion, n = 2..6", reiner},
      {"Artin basis n <= 5 and colon bases for every J, n <= 5", artin_colon},
      {"parabolic bases n <= 4 and the 360 = 2*18*10 chain", parabolic},
      {"D-operators n <= 4 and the P_{T,356} example", doperators},
      {"counting identities m <= 8, k <= m, t <= 5", counting},
      {"OMP statistics agree with tableaux, n <= 6", omp},
      {"operator closure equals Hilb(SR_n), n <= 4", closure},
      {"property suites, 1000 cases each", properties},
  };
  int failed = 0, index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), secs, o.pass ? "" : " -- ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria pass\n", index - failed, criteria.size());
  return failed ? 1 : 0;
}
