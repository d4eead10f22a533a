#include "scoin/harness/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/core/errors.hpp"
#include "scoin/doperators/doperators.hpp"
#include "scoin/harness/report.hpp"
#include "scoin/harness/version.hpp"
#include "scoin/symfunc/symfn.hpp"

namespace scoin::harness {

using comb::Partition;
using comb::Subset;
using exact::MPoly;

std::optional<std::int64_t> CountingCache::lookup(const std::string& key) {
  if (!inner_) return std::nullopt;
  auto v = inner_->lookup(key);
  if (v) ++hits_;
  return v;
}

void CountingCache::store(const std::string& key, std::int64_t value) {
  if (inner_) inner_->store(key, value);
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

struct Outcome {
  Verdict verdict;
  std::vector<Table> tables;
};

struct Check {
  std::string name;
  int cap;
  std::function<Outcome(int n, const RunContext& ctx, RankCache* cache)> body;
};

coinv::IdealSpec si(int n) { return coinv::IdealSpec::superspace_coinvariant(n); }

coinv::BidegreeTable hilbert(int n, const RunContext& ctx, RankCache* cache) {
  coinv::HilbertOptions opts;
  opts.jobs = ctx.jobs;
  opts.cache = cache;
  return coinv::quotient_hilbert(si(n), opts);
}

Outcome fields1(int n, const RunContext& ctx, RankCache* cache) {
  Outcome o;
  const auto t = hilbert(n, ctx, cache);
  const auto expect = comb::fields1_formula(n);
  if (!(t.to_qz() == expect))
    o.verdict.fail("Hilb(SR_" + std::to_string(n) + ") = " + t.to_qz().to_string() + " but the formula gives " + expect.to_string());
  const auto osp = static_cast<std::int64_t>(comb::enumerate_osp(n).size());
  if (t.total() != osp)
    o.verdict.fail("dim SR_" + std::to_string(n) + " = " + std::to_string(t.total()) + " but #OP_n = " + std::to_string(osp));
  o.verdict.note("dim SR_" + std::to_string(n) + " = " + std::to_string(t.total()));
  o.tables.push_back(bidegree_table(t, "dim (SR_" + std::to_string(n) + ")_{i,j}"));
  return o;
}

Outcome fields2(int n, const RunContext&, RankCache*) {
  Outcome o;
  auto engine = coinv::make_engine(si(n));
  Table tab{"dim eps_mu SR_" + std::to_string(n) + " against batch-increasing OSPs", {{"mu", "eps_mu SR_n", "OP_n(mu)"}}, {}};
  for (const auto& mu : comb::partitions_of(n)) {
    const std::int64_t got = coinv::epsilon_dims(*engine, mu).total();
    comb::OspConstraint c;
    c.batches = mu;
    const auto expect = static_cast<std::int64_t>(comb::enumerate_osp(n, c).size());
    if (got != expect)
      o.verdict.fail("mu = " + mu.to_string() + ": dim eps_mu SR_n = " + std::to_string(got) + " but #OP_n(mu) = " + std::to_string(expect));
    tab.rows.push_back({mu.to_string(), std::to_string(got), std::to_string(expect)});
  }
  o.tables.push_back(tab);
  return o;
}

Outcome fields3(int n, const RunContext&, RankCache*) {
  Outcome o;
  auto engine = coinv::make_engine(si(n));
  const auto frob = coinv::frobenius_reconstruct(*engine);
  sym::SymFn expect(n, sym::Basis::s);
  for (int k = 1; k <= n; ++k) expect += comb::QZPoly::z_power(n - k) * sym::cnk_syt(n, k);
  if (!(frob.total() == expect))
    o.verdict.fail("grFrob(SR_" + std::to_string(n) + ") = " + frob.total().to_string() + " but sum_k z^{n-k} C_{n,k} = " + expect.to_string());
  o.tables.push_back(frobenius_table(frob, "grFrob(SR_" + std::to_string(n) + ")"));
  return o;
}

Outcome reiner(int n, const RunContext&, RankCache*) {
  Outcome o;
  if (n < 2) {
    o.verdict.note("the recursion starts at n = 2");
    return o;
  }
  for (int k = 1; k <= n; ++k) {
    const auto lhs = sym::e1_perp(sym::cnk_syt(n, k));
    sym::SymFn sum(n - 1, sym::Basis::s);
    if (k - 1 >= 1) sum += sym::cnk_syt(n - 1, k - 1);
    if (k <= n - 1) sum += sym::cnk_syt(n - 1, k);
    const auto rhs = comb::q_integer(k) * sum;
    if (!(lhs == rhs))
      o.verdict.fail("n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": e1^perp C_{n,k} = " + lhs.to_string() +
                     " but [k]_q (C_{n-1,k-1} + C_{n-1,k}) = " + rhs.to_string());
  }
  return o;
}

Outcome artin(int n, const RunContext&, RankCache*) { return {coinv::verify_artin_basis(n), {}}; }

Outcome colon(int n, const RunContext&, RankCache*) {
  Outcome o;
  Table tab{"Artin monomials of J against dim F[x]/(I_n : f_J)", {{"J", "st(J)", "#A_n(J)", "dim"}}, {}};
  for (const auto& J : comb::all_subsets(n)) {
    o.verdict.merge(coinv::verify_colon_basis(J));
    std::int64_t dim = 0;
    for (auto d : coinv::colon_hilbert(J)) dim += d;
    std::string st;
    for (int s : comb::staircase(J)) st += (st.empty() ? "" : ",") + std::to_string(s);
    tab.rows.push_back({J.to_string(), "(" + st + ")", std::to_string(comb::enumerate_artin(J).size()), std::to_string(dim)});
  }
  o.tables.push_back(tab);
  return o;
}

// The running example mu = (3,3,2), gamma = (1,2,0): |E| = 2 * 18 * 10 = 360 = #A_8(mu,gamma).
Verdict counting_chain_332() {
  Verdict v;
  const comb::SignedPartition sp(Partition({3, 3, 2}), {1, 2, 0});
  const auto st = comb::staircase(comb::j_of_signed(sp));
  std::int64_t prod = 1;
  std::string factors;
  int t = 0;
  for (int j = 0; j < sp.mu.length(); ++j) {
    const int m = sp.mu.part(j), k = sp.gamma[static_cast<std::size_t>(j)];
    const auto c = comb::count_I(m, k, t);
    if (c != comb::count_L(m, k, t)) v.fail("#L != #I at block " + std::to_string(j + 1));
    prod *= c;
    factors += (factors.empty() ? "" : "*") + std::to_string(c);
    t = st[static_cast<std::size_t>(sp.mu.block_end(j) - 1)];
  }
  if (factors != "2*18*10") v.fail("block factors are " + factors + ", expected 2*18*10");
  if (prod != 360 || comb::count_signed_artin_product(sp) != 360 || comb::count_signed_artin_via_I(sp) != 360 ||
      dop::build_E_set(sp).size() != 360)
    v.fail("the (3,3,2), (1,2,0) counts do not all equal 360");
  v.note("360 = " + factors);
  return v;
}

Outcome parabolic(int n, const RunContext&, RankCache*) {
  Outcome o;
  auto engine = coinv::make_engine(si(n));
  for (const auto& mu : comb::partitions_of(n)) o.verdict.merge(coinv::verify_parabolic_basis(*engine, mu));
  o.verdict.merge(counting_chain_332());
  return o;
}

bool admissible(const comb::TranslationSequence& T) { return !T.sets.front().contains(1); }

Outcome dop_leading(int n, const RunContext&, RankCache*) {
  Outcome o;
  int count = 0;
  for (const auto& mu : comb::partitions_of(n))
    for (const auto& T : comb::translation_sequences_of(mu)) {
      if (!admissible(T)) continue;
      o.verdict.merge(dop::verify_leading(T));
      ++count;
    }
  o.verdict.note(std::to_string(count) + " translation sequences with 1 not in T_1");
  return o;
}

Outcome dop_gale(int n, const RunContext&, RankCache*) {
  Outcome o;
  for (const auto& mu : comb::partitions_of(n))
    for (const auto& T : comb::translation_sequences_of(mu)) {
      const Subset J0 = comb::j_of_signed(T.signed_partition());
      for (const auto& J : comb::subsets_of_size(n, T.total()))
        if (!comb::gale_leq(J, J0) && !dop::ptj_determinant(T, J).is_zero())
          o.verdict.fail("T = " + T.to_string() + ": P_{T," + J.to_string() + "} != 0 although J is not Gale-below " + J0.to_string());
      if (!admissible(T)) continue;
      const auto q = dop::ptj_determinant(T, J0).divide_exact(super::f_J_poly(J0));
      const MPoly w = dop::weight(T);
      if (!q || !(*q == w || *q == -w))
        o.verdict.fail("T = " + T.to_string() + ": P_{T,J(mu,gamma)} != +-f_J s(T)");
    }
  // the worked example mu = (3,3,2), T = ({2},{4,6},{}), J = {3,5,6}
  const comb::TranslationSequence T(Partition({3, 3, 2}), {Subset(8, {2}), Subset(8, {4, 6}), Subset(8, {})});
  const Subset J(8, {3, 5, 6});
  const MPoly target = super::f_J_poly(J) * sym::schur_poly(Partition({1}), 8, {2}) * sym::schur_poly(Partition({1}), 8, {4, 5});
  const MPoly p = dop::ptj_determinant(T, J);
  if (!(p == target || p == -target)) o.verdict.fail("P_{T,356} != +-f_356 s_1(x3) s_1(x5,x6)");
  return o;
}

Outcome counting(int n, const RunContext&, RankCache*) {
  Outcome o;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k <= m; ++k)
      for (int t = 0; t <= 5; ++t) {
        const auto L = comb::count_L(m, k, t), I = comb::count_I(m, k, t);
        const auto eL = static_cast<std::int64_t>(comb::enumerate_L_pairs(m, k, t).size());
        const auto eI = static_cast<std::int64_t>(comb::enumerate_I(m, k, t).size());
        if (L != I || L != eL || L != eI)
          o.verdict.fail("(m,k,t) = (" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(t) + "): #L = " +
                         std::to_string(L) + ", #I = " + std::to_string(I) + ", enumerated " + std::to_string(eL) + " and " +
                         std::to_string(eI));
        o.verdict.merge(dop::verify_monomial_bound(m, k, t));
      }
  if (n >= 5) {
    if (comb::count_L(5, 2, 2) != 150) o.verdict.fail("#L(5,2,2) != 150");
    if (comb::elevated_staircase(5, 2, 2) != comb::ExponentVec{2, 3, 4, 4, 4}) o.verdict.fail("bound for (5,2,2) != (2,3,4,4,4)");
  }
  for (const auto& mu : comb::partitions_of(n))
    for (const auto& sp : comb::signed_partitions_of(mu)) {
      const auto a = comb::count_signed_artin_product(sp), b = comb::count_signed_artin_via_I(sp);
      const auto e = static_cast<std::int64_t>(comb::enumerate_signed_artin(sp).size());
      if (a != b || a != e) o.verdict.fail(sp.to_string() + ": #A_n(mu,gamma) counts disagree");
    }
  return o;
}

Outcome omp_stats(int n, const RunContext&, RankCache*) {
  Outcome o;
  const comb::OmpStat stats[] = {comb::OmpStat::inv, comb::OmpStat::maj, comb::OmpStat::dinv, comb::OmpStat::minimaj};
  for (int k = 1; k <= n; ++k) {
    const auto syt = sym::cnk_syt(n, k);
    for (auto st : stats) {
      const auto f = sym::cnk_omp(n, k, st);
      if (!(f == syt))
        o.verdict.fail("C_{" + std::to_string(n) + "," + std::to_string(k) + "} via " + std::string(comb::to_string(st)) +
                       " = " + sym::to_basis(f, sym::Basis::s).to_string() + " but via tableaux " + syt.to_string());
    }
  }
  return o;
}

Outcome operator_closure(int n, const RunContext& ctx, RankCache* cache) {
  Outcome o;
  const auto closure = coinv::operator_closure(n);
  const auto quotient = hilbert(n, ctx, cache);
  if (!(closure == quotient))
    o.verdict.fail("operator closure " + closure.to_qz().to_string() + " != Hilb(SR_n) " + quotient.to_qz().to_string());
  o.tables.push_back(bidegree_table(closure, "closure of delta_" + std::to_string(n) + " under d_j and d/dx_i"));
  return o;
}

Outcome steinberg(int n, const RunContext& ctx, RankCache*) {
  Outcome o;
  const auto delta = super::vandermonde(n);
  const MPoly d = delta.to_poly();
  for (const auto& g : super::coinvariant_generators(n))
    if (!super::odot(g, delta).is_zero()) o.verdict.fail("generator " + g.to_string() + " does not kill delta_n");
  // random members of I_n kill delta_n
  std::mt19937 rng(ctx.seed);
  std::uniform_int_distribution<int> coef(-3, 3), var(0, n - 1), deg(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly f(n);
    for (int e = 1; e <= n; ++e) {
      MPoly r(n);
      for (int t = 0; t < 3; ++t) {
        MPoly m = MPoly::constant(n, coef(rng));
        for (int a = deg(rng); a > 0; --a) m = m * MPoly::variable(n, var(rng));
        r += m;
      }
      f += r * super::elementary(n, e).to_poly();
    }
    if (!f.apply_as_operator(d).is_zero()) o.verdict.fail("an element of I_n does not kill delta_n: " + f.to_string());
  }
  // the Artin monomials give n! independent derivatives, so nothing outside I_n kills delta_n
  exact::RowEchelon span;
  std::map<exact::Exponent, int> index;
  for (const auto& a : comb::enumerate_artin(n)) {
    exact::Exponent e(a);
    const MPoly img = MPoly::monomial(n, e).apply_as_operator(d);
    std::map<int, exact::Rational> row;
    for (const auto& [m, c] : img.terms()) row[index.try_emplace(m, static_cast<int>(index.size())).first->second] += c;
    span.insert(exact::make_sparse(row));
  }
  if (span.rank() != comb::factorial(n))
    o.verdict.fail("Artin derivatives of delta_n span " + std::to_string(span.rank()) + " < n! dimensions");
  return o;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> c{
      {"fields1", 5, fields1},     {"fields2", 4, fields2},       {"fields3", 4, fields3},
      {"reiner", 6, reiner},       {"artin", 5, artin},           {"colon", 5, colon},
      {"parabolic", 4, parabolic}, {"dop-leading", 4, dop_leading}, {"dop-gale", 5, dop_gale},
      {"counting", 8, counting},   {"omp-stats", 6, omp_stats},   {"operator-closure", 4, operator_closure},
      {"steinberg", 5, steinberg},
  };
  return c;
}

std::mutex caps_mutex;
std::map<std::string, int>& cap_overrides() {
  static std::map<std::string, int> m;
  return m;
}

const Check& find_check(const std::string& name) {
  for (const auto& c : checks())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

CapLift::CapLift(bool active) : active_(active), engine_(coinv::engine_caps()), enumeration_(comb::enumeration_caps()) {
  if (!active_) return;
  auto& e = coinv::engine_caps();
  e.hilbert = e.frobenius = e.closure = 1 << 20;
  e.matrix_cells = INT64_MAX;
  comb::enumeration_caps().max_n = 1 << 20;
}

CapLift::~CapLift() {
  if (!active_) return;
  coinv::engine_caps() = engine_;
  comb::enumeration_caps() = enumeration_;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : checks()) v.push_back(c.name);
    return v;
  }();
  return names;
}

int check_cap(const std::string& name) {
  const Check& c = find_check(name);
  std::lock_guard lock(caps_mutex);
  auto it = cap_overrides().find(name);
  return it == cap_overrides().end() ? c.cap : it->second;
}

void set_check_cap(const std::string& name, int cap) {
  find_check(name);
  std::lock_guard lock(caps_mutex);
  cap_overrides()[name] = cap;
}

Report run(const CheckSpec& spec, const RunContext& ctx) {
  const Check& check = find_check(spec.name);
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  Report r;
  r.check = spec.name;
  r.version = kToolVersion;
  r.parameters.emplace_back("n", std::to_string(spec.n));
  for (const auto& [k, v] : spec.options) r.parameters.emplace_back(k, v);

  const int cap = check_cap(spec.name);
  if (spec.n > cap && !ctx.force) {
    r.status = Status::skipped;
    r.notes.push_back("n = " + std::to_string(spec.n) + " exceeds the cap " + std::to_string(cap) + " for " + spec.name +
                      "; pass --force to run it anyway");
    return r;
  }
  CountingCache cache(ctx.cache);
  const auto start = std::chrono::steady_clock::now();
  try {
    CapLift lift(ctx.force);
    Outcome o = check.body(spec.n, ctx, &cache);
    r.status = o.verdict.pass ? Status::pass : Status::fail;
    r.witnesses = std::move(o.verdict.witnesses);
    r.notes = std::move(o.verdict.notes);
    r.tables = std::move(o.tables);
  } catch (const ResourceError& e) {
    r.status = Status::skipped;
    r.notes.push_back(std::string("resource limit: ") + e.what());
  } catch (const IntegrityError& e) {
    r.status = Status::fail;
    r.witnesses.push_back(std::string("integrity error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.cache_hits = cache.hits();
  return r;
}

}  // namespace scoin::harness
