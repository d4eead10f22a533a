#include "scoin/harness/properties.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/harness/random.hpp"
#include "scoin/symfunc/symfn.hpp"

namespace scoin::harness {

using exact::Rational;
using super::SuperElement;

namespace {

constexpr std::size_t kMaxWitnesses = 5;

// One randomized case; returns an empty string on success and a description otherwise.
using CaseFn = std::function<std::string(std::mt19937&, int nmax)>;

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string anticommutation_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const int i = pick(rng, 1, n), j = pick(rng, 1, n);
  const auto ti = SuperElement::theta(n, i), tj = SuperElement::theta(n, j);
  if (!(ti * tj == -(tj * ti))) return "theta" + std::to_string(i) + " theta" + std::to_string(j) + " does not anticommute";
  if (!(ti * ti).is_zero()) return "theta" + std::to_string(i) + "^2 != 0";
  // graded commutativity on random bihomogeneous elements
  const int a = pick(rng, 0, std::min(2, n)), b = pick(rng, 0, std::min(2, n));
  const auto f = random_element(rng, n, 3, 2, pick(rng, 0, 2), a);
  const auto g = random_element(rng, n, 3, 2, pick(rng, 0, 2), b);
  const Rational s = (a * b) % 2 ? -1 : 1;
  if (!(f * g == s * (g * f))) return "f g != (-1)^{ab} g f for f = " + f.to_string() + ", g = " + g.to_string();
  const auto h = random_element(rng, n, 2, 2);
  if (!((f * g) * h == f * (g * h))) return "associativity fails for " + f.to_string() + ", " + g.to_string() + ", " + h.to_string();
  return {};
}

std::string contraction_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const int i = pick(rng, 1, n), j = pick(rng, 1, n);
  const auto f = random_element(rng, n, 4, 2);
  const std::string tag = " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", f=" + f.to_string() + ")";
  if (!(super::contract_theta(i, super::contract_theta(j, f)) == -super::contract_theta(j, super::contract_theta(i, f))))
    return "contractions do not anticommute" + tag;
  // c_i theta_j + theta_j c_i = delta_ij
  const auto tj = SuperElement::theta(n, j);
  const auto lhs = super::contract_theta(i, tj * f) + tj * super::contract_theta(i, f);
  if (!(lhs == (i == j ? f : SuperElement(n)))) return "c_i theta_j + theta_j c_i != delta_ij" + tag;
  if (!(super::partial_x(i, super::contract_theta(j, f)) == super::contract_theta(j, super::partial_x(i, f))))
    return "contraction does not commute with d/dx" + tag;
  return {};
}

std::string odot_module_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const auto f = random_element(rng, n, 2, 2, -1, 0);
  const auto g = random_element(rng, n, 2, 2, -1, 0);
  const auto h = random_element(rng, n, 5, 5);
  if (!(super::odot(f * g, h) == super::odot(f, super::odot(g, h))))
    return "(fg) (.) h != f (.) (g (.) h) for f = " + f.to_string() + ", g = " + g.to_string() + ", h = " + h.to_string();
  if (!(super::odot(f + g, h) == super::odot(f, h) + super::odot(g, h))) return "odot is not additive in its first argument";
  return {};
}

std::string antisymmetrizer_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const auto parts = comb::partitions_of(n);
  const auto& mu = parts[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(parts.size()) - 1))];
  std::int64_t order = 1;
  for (int p : mu.parts()) order *= comb::factorial(p);
  const auto f = random_element(rng, n, 3, 3);
  const auto once = super::antisymmetrize(mu, f);
  if (!(super::antisymmetrize(mu, once) == once * Rational(order)))
    return "eps_mu eps_mu f != |S_mu| eps_mu f for mu = " + mu.to_string() + ", f = " + f.to_string();
  return {};
}

std::string gale_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const int k = pick(rng, 0, n);
  const auto all = comb::subsets_of_size(n, k);
  auto any = [&]() -> const comb::Subset& { return all[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(all.size()) - 1))]; };
  const comb::Subset &a = any(), &b = any(), &c = any();
  const std::string tag = " (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
  if (!comb::gale_leq(a, a)) return "reflexivity fails" + tag;
  if (comb::gale_leq(a, b) && comb::gale_leq(b, a) && !(a == b)) return "antisymmetry fails" + tag;
  if (comb::gale_leq(a, b) && comb::gale_leq(b, c) && !comb::gale_leq(a, c)) return "transitivity fails" + tag;
  return {};
}

std::string kostka_case(std::mt19937& rng, int nmax) {
  const int n = pick(rng, 1, nmax);
  const auto parts = comb::partitions_of(n);
  auto any = [&]() -> const comb::Partition& {
    return parts[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(parts.size()) - 1))];
  };
  const comb::Partition &l = any(), &m = any();
  const std::string tag = " (lambda=" + l.to_string() + ", mu=" + m.to_string() + ")";
  const std::int64_t k = comb::kostka(l, m);
  if (k != sym::kostka_cached(l, m)) return "tableau count and cached Kostka number disagree" + tag;
  if (comb::kostka(l, l) != 1) return "K_{lambda,lambda} != 1" + tag;
  if (k != 0 && !l.dominates(m)) return "K_{lambda,mu} != 0 without lambda dominating mu" + tag;
  return {};
}

std::string rank_nullity_case(std::mt19937& rng, int nmax) {
  const int r = pick(rng, 1, nmax + 2), c = pick(rng, 1, nmax + 2);
  const auto m = random_qmatrix(rng, r, c);
  const int rk = m.rank();
  const auto ker = m.kernel_basis();
  const std::string tag = " (" + std::to_string(r) + "x" + std::to_string(c) + ", rank " + std::to_string(rk) + ")";
  if (rk + static_cast<int>(ker.size()) != c) return "rank + nullity != columns" + tag;
  for (const auto& v : ker)
    for (int i = 0; i < r; ++i) {
      Rational s = 0;
      for (int j = 0; j < c; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
      if (!s.is_zero()) return "kernel vector not annihilated" + tag;
    }
  std::vector<int> pr(static_cast<std::size_t>(r)), pc(static_cast<std::size_t>(c));
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  if (m.permute_rows(pr).permute_cols(pc).rank() != rk) return "rank changes under permutation" + tag;
  return {};
}

struct Suite {
  std::string name;
  CaseFn fn;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s{
      {"anticommutation", anticommutation_case}, {"contraction", contraction_case},
      {"odot-module", odot_module_case},         {"antisymmetrizer", antisymmetrizer_case},
      {"gale-order", gale_case},                 {"kostka", kostka_case},
      {"rank-nullity", rank_nullity_case},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& property_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

PropertyResult run_property_suite(const std::string& name, std::uint32_t seed, int cases, int nmax) {
  if (nmax < 1) throw std::invalid_argument("property suites need nmax >= 1");
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; });
  if (it == all.end()) throw std::invalid_argument("unknown property suite '" + name + "'");
  std::seed_seq seq{seed, static_cast<std::uint32_t>(it - all.begin())};
  std::mt19937 rng(seq);
  PropertyResult r;
  r.name = name;
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    const std::string w = it->fn(rng, nmax);
    if (w.empty()) continue;
    ++r.failures;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back("case " + std::to_string(c) + ": " + w);
  }
  return r;
}

std::vector<PropertyResult> run_property_suites(std::uint32_t seed, int cases, int nmax) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_suite_names()) out.push_back(run_property_suite(name, seed, cases, nmax));
  return out;
}

}  // namespace scoin::harness
