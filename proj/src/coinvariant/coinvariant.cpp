#include "scoin/coinvariant/coinvariant.hpp"

#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/core/errors.hpp"

namespace scoin::coinv {

using comb::Partition;
using comb::QZPoly;
using comb::Subset;
using exact::Exponent;
using exact::MPoly;
using exact::Rational;

namespace {

int top_degree(int n) { return n * (n - 1) / 2; }

SuperElement monomial_element(int n, const comb::ExponentVec& a, std::uint32_t thetas) {
  return SuperElement::monomial(n, SuperMonomial{Exponent(a), thetas});
}

std::string describe(const comb::ExponentVec& a, const Subset& J) {
  std::string s = "x^(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ") theta_" + J.to_string();
}

// Coordinates of a polynomial against a growing monomial index.
SparseVec poly_coords(const MPoly& p, std::map<Exponent, int>& index) {
  std::map<int, Rational> acc;
  for (const auto& [e, c] : p.terms()) {
    auto it = index.try_emplace(e, static_cast<int>(index.size())).first;
    acc[it->second] += c;
  }
  return exact::make_sparse(acc);
}

SparseVec super_coords(const SuperElement& f, std::map<SuperMonomial, int>& index) {
  std::map<int, Rational> acc;
  for (const auto& [m, c] : f.terms()) {
    auto it = index.try_emplace(m, static_cast<int>(index.size())).first;
    acc[it->second] += c;
  }
  return exact::make_sparse(acc);
}

void check_hilbert_cap(int n) {
  if (n > engine_caps().hilbert)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the Hilbert cap " + std::to_string(engine_caps().hilbert));
}

}  // namespace

EngineCaps& engine_caps() {
  static EngineCaps caps;
  return caps;
}

std::int64_t BidegreeTable::at(int i, int j) const {
  auto it = dims.find({i, j});
  return it == dims.end() ? 0 : it->second;
}

std::int64_t BidegreeTable::total() const {
  std::int64_t t = 0;
  for (const auto& [k, v] : dims) t = comb::checked_add(t, v);
  return t;
}

QZPoly BidegreeTable::to_qz() const {
  QZPoly p;
  for (const auto& [k, v] : dims) p.add_term(k.first, k.second, v);
  return p;
}

BidegreeTable BidegreeTable::normalized() const {
  BidegreeTable t{n, {}};
  for (const auto& [k, v] : dims)
    if (v != 0) t.dims.emplace(k, v);
  return t;
}

bool operator==(const BidegreeTable& a, const BidegreeTable& b) {
  return a.n == b.n && a.normalized().dims == b.normalized().dims;
}

sym::SymFn FrobeniusTable::total() const {
  sym::SymFn f(n, sym::Basis::s);
  for (const auto& [k, v] : entries) f += QZPoly::monomial(k.first, k.second) * v;
  return f;
}

std::unique_ptr<QuotientEngine> make_engine(const IdealSpec& spec, EngineKind kind) {
  const bool superspace_ci = spec.tag == "SI" && !spec.bosonic_only;
  if (kind == EngineKind::artin && !superspace_ci)
    throw std::invalid_argument("the Artin engine only handles the superspace coinvariant ideal");
  if (kind == EngineKind::artin || (kind == EngineKind::automatic && superspace_ci)) return make_artin_engine(spec.n);
  return make_full_engine(spec);
}

std::int64_t estimate_full_cells(const IdealSpec& spec) {
  const int n = spec.n;
  auto ambient = [&](int i, int j) -> std::int64_t {
    if (i < 0 || j < 0 || j > n || (spec.bosonic_only && j > 0)) return 0;
    return comb::checked_mul(comb::binomial(i + n - 1, n - 1), comb::binomial(n, j));
  };
  std::int64_t cells = 0;
  for (int i = 0; i <= top_degree(n) + 2; ++i) {
    for (int j = 0; j <= n; ++j) {
      std::int64_t rows = 0;
      for (const auto& g : spec.generators) {
        auto [a, b] = g.bidegree();
        rows = comb::checked_add(rows, ambient(i - a, j - b));
      }
      cells = comb::checked_add(cells, comb::checked_mul(rows, ambient(i, j)));
    }
  }
  return cells;
}

BidegreeTable quotient_hilbert(const IdealSpec& spec, const HilbertOptions& opts) {
  check_hilbert_cap(spec.n);
  auto probe = make_engine(spec, opts.engine);
  if (probe->name() == "full" && estimate_full_cells(spec) > engine_caps().matrix_cells)
    throw ResourceError("projected matrix size for n = " + std::to_string(spec.n) + " exceeds the configured budget");

  const int n = spec.n;
  const int bound = top_degree(n) + 2;
  std::vector<Bidegree> units;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= (spec.bosonic_only ? 0 : n); ++j) units.emplace_back(i, j);
  std::vector<std::int64_t> results(units.size(), 0);

  const std::string key_prefix = probe->name() + "|" + spec.canonical_text() + "|";
  auto work = [&](QuotientEngine& engine, std::size_t u) {
    auto [i, j] = units[u];
    const std::string key = key_prefix + std::to_string(i) + "," + std::to_string(j);
    if (opts.cache) {
      if (auto hit = opts.cache->lookup(key)) {
        results[u] = *hit;
        return;
      }
    }
    results[u] = engine.quotient_dim(i, j);
    if (opts.cache) opts.cache->store(key, results[u]);
  };

  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(units.size())));
  if (jobs == 1) {
    for (std::size_t u = 0; u < units.size(); ++u) work(*probe, u);
  } else {
    // Each worker owns an engine (their memo tables are not shared); results land in fixed slots.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          auto engine = make_engine(spec, opts.engine);
          for (std::size_t u; (u = next.fetch_add(1)) < units.size();) work(*engine, u);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BidegreeTable table{n, {}};
  for (std::size_t u = 0; u < units.size(); ++u) {
    auto [i, j] = units[u];
    if (results[u] == 0) continue;
    if (i > top_degree(n))
      throw IntegrityError("nonzero quotient dimension at bidegree (" + std::to_string(i) + "," + std::to_string(j) +
                           ") above the degree bound");
    table.dims[units[u]] = results[u];
  }
  return table;
}

std::vector<SuperElement> harmonic_basis(const IdealSpec& spec, int i, int j) {
  const int n = spec.n;
  const auto cols = spec.bosonic_only && j != 0 ? std::vector<SuperMonomial>{} : monomial_basis(n, i, j);
  // Row per (generator, target monomial); entry per source column.
  std::map<std::pair<std::size_t, SuperMonomial>, std::map<int, Rational>> rows;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto img = super::odot(spec.generators[g], SuperElement::monomial(n, cols[c]));
      for (const auto& [m, v] : img.terms()) rows[{g, m}][static_cast<int>(c)] += v;
    }
  }
  exact::SparseMatrix mat(static_cast<int>(cols.size()));
  for (const auto& [k, r] : rows) mat.add_row(exact::make_sparse(r));
  std::vector<SuperElement> out;
  for (const auto& v : mat.kernel_basis()) {
    SuperElement h(n);
    for (const auto& [c, val] : v) h.add_term(cols[static_cast<std::size_t>(c)], val);
    out.push_back(std::move(h));
  }
  return out;
}

BidegreeTable operator_closure(int n) {
  if (n > engine_caps().closure)
    throw ResourceError("operator closure beyond n = " + std::to_string(engine_caps().closure) + " is disabled");
  struct Level {
    RowEchelon span;
    std::map<SuperMonomial, int> index;
    std::vector<SuperElement> basis;
  };
  std::map<Bidegree, Level> levels;
  auto add = [&](const SuperElement& f) {
    if (f.is_zero()) return;
    auto& lv = levels[f.bidegree()];
    if (lv.span.insert(super_coords(f, lv.index))) lv.basis.push_back(f);
  };
  add(super::vandermonde(n));
  // Every operator lowers the bosonic degree, so a level is complete once all higher ones are processed.
  for (int i = top_degree(n); i >= 0; --i) {
    for (int j = 0; j <= n; ++j) {
      auto it = levels.find({i, j});
      if (it == levels.end()) continue;
      const auto basis = it->second.basis;
      for (const auto& b : basis) {
        for (int k = 1; k < n; ++k) add(super::euler_d(k, b));
        for (int m = 1; m <= n; ++m) add(super::partial_x(m, b));
      }
    }
  }
  BidegreeTable t{n, {}};
  for (const auto& [k, lv] : levels) t.dims[k] = lv.span.rank();
  return t;
}

MPoly colon_generator(const Subset& J) {
  const int n = J.ambient();
  return super::f_J_poly(J).apply_as_operator(super::vandermonde(n).to_poly());
}

bool colon_membership(const MPoly& g, const Subset& J) {
  const int n = J.ambient();
  return (g.with_nvars(n) * super::f_J_poly(J)).apply_as_operator(super::vandermonde(n).to_poly()).is_zero();
}

std::vector<std::int64_t> colon_hilbert(const Subset& J) {
  const MPoly h = colon_generator(J);
  std::vector<std::int64_t> dims;
  if (h.is_zero()) return dims;
  const int n = J.ambient();
  // (I_n : f_J) is the annihilator of h_J = f_J (.) delta_n, so the quotient in degree d
  // is the span of the order-d derivatives of h_J.
  for (int d = 0; d <= h.degree(); ++d) {
    RowEchelon span;
    std::map<Exponent, int> index;
    for (const auto& m : monomial_basis(n, d, 0)) span.insert(poly_coords(MPoly::monomial(n, m.exps).apply_as_operator(h), index));
    dims.push_back(span.rank());
  }
  return dims;
}

Verdict verify_colon_basis(const Subset& J) {
  const int n = J.ambient();
  Verdict v;
  const MPoly h = colon_generator(J);
  const auto dims = colon_hilbert(J);
  std::map<int, std::vector<comb::ExponentVec>> by_degree;
  for (const auto& a : comb::enumerate_artin(J)) {
    int d = 0;
    for (int x : a) d += x;
    by_degree[d].push_back(a);
  }
  const int top = std::max<int>(static_cast<int>(dims.size()) - 1, by_degree.empty() ? -1 : by_degree.rbegin()->first);
  for (int d = 0; d <= top; ++d) {
    RowEchelon span;
    std::map<Exponent, int> index;
    const auto& monos = by_degree[d];
    for (const auto& a : monos) {
      if (!span.insert(poly_coords(MPoly::monomial(n, Exponent(a)).apply_as_operator(h), index)))
        v.fail("J=" + J.to_string() + ": " + describe(a, Subset(n, {})) + " is dependent in degree " + std::to_string(d));
    }
    const std::int64_t expect = d < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(d)] : 0;
    if (static_cast<std::int64_t>(monos.size()) != expect)
      v.fail("J=" + J.to_string() + ": degree " + std::to_string(d) + " has " + std::to_string(monos.size()) +
             " Artin monomials but quotient dimension " + std::to_string(expect));
  }
  return v;
}

bool steinberg_independence(const std::vector<MPoly>& gs, const Subset& J) {
  // (g f_J) (.) delta_n = g (.) (f_J (.) delta_n) for polynomials, so h_J is computed once.
  const int n = J.ambient();
  const MPoly h = colon_generator(J);
  RowEchelon span;
  std::map<Exponent, int> index;
  for (const auto& g : gs)
    if (!span.insert(poly_coords(g.with_nvars(n).apply_as_operator(h), index))) return false;
  return true;
}

Verdict verify_artin_basis(QuotientEngine& engine) {
  const int n = engine.n();
  Verdict v;
  std::map<Bidegree, std::vector<std::pair<comb::ExponentVec, Subset>>> elems;
  std::int64_t count = 0;
  for (const auto& J : comb::all_subsets(n)) {
    for (const auto& a : comb::enumerate_artin(J)) {
      int d = 0;
      for (int x : a) d += x;
      elems[{d, J.size()}].emplace_back(a, J);
      ++count;
    }
  }
  std::int64_t total = 0;
  for (int i = 0; i <= top_degree(n); ++i) {
    for (int j = 0; j <= n; ++j) {
      const int qdim = engine.quotient_dim(i, j);
      total += qdim;
      const auto& list = elems[{i, j}];
      RowEchelon span = engine.ideal_span(i, j);
      for (const auto& [a, J] : list) {
        if (!span.insert(engine.coordinates(monomial_element(n, a, J.mask()), i, j)))
          v.fail("bidegree (" + std::to_string(i) + "," + std::to_string(j) + "): " + describe(a, J) +
                 " is dependent modulo the ideal");
      }
      if (static_cast<int>(list.size()) != qdim)
        v.fail("bidegree (" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(list.size()) +
               " basis elements but quotient dimension " + std::to_string(qdim));
    }
  }
  if (count != total) v.fail("|A_n| = " + std::to_string(count) + " but total dimension " + std::to_string(total));
  v.note("n=" + std::to_string(n) + " |A_n|=" + std::to_string(count));
  return v;
}

Verdict verify_artin_basis(int n) {
  check_hilbert_cap(n);
  auto engine = make_engine(IdealSpec::superspace_coinvariant(n));
  return verify_artin_basis(*engine);
}

BidegreeTable epsilon_dims(QuotientEngine& engine, const Partition& mu) {
  const int n = engine.n();
  if (mu.size() != n) throw std::invalid_argument("epsilon_dims: mu must be a partition of n");
  BidegreeTable t{n, {}};
  for (int i = 0; i <= top_degree(n); ++i) {
    for (int j = 0; j <= n; ++j) {
      const auto& ideal = engine.ideal_span(i, j);
      const auto pivots = ideal.pivot_columns();
      const std::set<int> pivot_set(pivots.begin(), pivots.end());
      RowEchelon image;
      // Non-pivot columns are coset representatives of the quotient component.
      for (int c = 0; c < engine.ambient_dim(i, j); ++c) {
        if (pivot_set.count(c)) continue;
        const auto e = super::antisymmetrize(mu, engine.column_element(i, j, c));
        if (!e.is_zero()) image.insert(engine.reduce(e, i, j));
      }
      if (image.rank() > 0) t.dims[{i, j}] = image.rank();
    }
  }
  return t;
}

BidegreeTable epsilon_dims(const Partition& mu) {
  check_hilbert_cap(mu.size());
  auto engine = make_engine(IdealSpec::superspace_coinvariant(mu.size()));
  return epsilon_dims(*engine, mu);
}

Verdict verify_parabolic_basis(QuotientEngine& engine, const Partition& mu) {
  const int n = engine.n();
  Verdict v;
  std::map<Bidegree, RowEchelon> spans;
  std::map<Bidegree, std::int64_t> counts;
  for (const auto& sp : comb::signed_partitions_of(mu)) {
    const Subset J = comb::j_of_signed(sp);
    for (const auto& a : comb::enumerate_signed_artin(sp)) {
      int d = 0;
      for (int x : a) d += x;
      const Bidegree bd{d, J.size()};
      ++counts[bd];
      const auto e = super::antisymmetrize(mu, monomial_element(n, a, J.mask()));
      auto it = spans.find(bd);
      if (it == spans.end()) it = spans.emplace(bd, engine.ideal_span(bd.first, bd.second)).first;
      if (e.is_zero() || !it->second.insert(engine.coordinates(e, bd.first, bd.second)))
        v.fail("mu=" + mu.to_string() + " gamma=" + sp.to_string() + ": eps " + describe(a, J) + " is dependent");
    }
  }
  const auto dims = epsilon_dims(engine, mu);
  BidegreeTable built{n, counts};
  if (!(built == dims)) {
    for (const auto& [bd, c] : counts)
      if (dims.at(bd.first, bd.second) != c)
        v.fail("mu=" + mu.to_string() + " bidegree (" + std::to_string(bd.first) + "," + std::to_string(bd.second) +
               "): " + std::to_string(c) + " elements but dimension " + std::to_string(dims.at(bd.first, bd.second)));
    for (const auto& [bd, c] : dims.dims)
      if (!counts.count(bd))
        v.fail("mu=" + mu.to_string() + " bidegree (" + std::to_string(bd.first) + "," + std::to_string(bd.second) +
               "): no elements but dimension " + std::to_string(c));
  }
  v.note("mu=" + mu.to_string() + " elements=" + std::to_string(built.total()) + " dim=" + std::to_string(dims.total()));
  return v;
}

Verdict verify_parabolic_basis(const Partition& mu) {
  check_hilbert_cap(mu.size());
  auto engine = make_engine(IdealSpec::superspace_coinvariant(mu.size()));
  return verify_parabolic_basis(*engine, mu);
}

FrobeniusTable frobenius_reconstruct(QuotientEngine& engine) {
  const int n = engine.n();
  if (n > engine_caps().frobenius)
    throw ResourceError("Frobenius reconstruction beyond n = " + std::to_string(engine_caps().frobenius) + " is disabled");
  const auto parts = comb::partitions_of(n);
  std::vector<BidegreeTable> eps;
  std::set<Bidegree> support;
  for (const auto& mu : parts) {
    eps.push_back(epsilon_dims(engine, mu));
    for (const auto& [bd, d] : eps.back().dims) support.insert(bd);
  }
  // Row mu, column lambda: <s_lambda, e_mu> = K_{lambda', mu}.
  const int p = static_cast<int>(parts.size());
  exact::QMatrix A(p, p);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c)
      A.at(r, c) = Rational(sym::kostka_cached(parts[static_cast<std::size_t>(c)].conjugate(), parts[static_cast<std::size_t>(r)]));
  FrobeniusTable out{n, {}};
  for (const auto& bd : support) {
    std::vector<Rational> rhs;
    for (const auto& t : eps) rhs.emplace_back(t.at(bd.first, bd.second));
    const auto sol = A.solve(rhs);
    if (!sol) throw IntegrityError("Frobenius system is inconsistent");
    sym::SymFn f(n, sym::Basis::s);
    for (int c = 0; c < p; ++c) {
      const Rational& x = (*sol)[static_cast<std::size_t>(c)];
      if (!x.is_integer() || x.sign() < 0)
        throw IntegrityError("Schur coefficient " + x.to_string() + " of s_" + parts[static_cast<std::size_t>(c)].to_string() +
                             " is not a nonnegative integer");
      if (!x.is_zero()) f.add(parts[static_cast<std::size_t>(c)], QZPoly(x.to_int64()));
    }
    out.entries.emplace(bd, std::move(f));
  }
  return out;
}

FrobeniusTable frobenius_reconstruct(int n) {
  check_hilbert_cap(n);
  auto engine = make_engine(IdealSpec::superspace_coinvariant(n));
  return frobenius_reconstruct(*engine);
}

}  // namespace scoin::coinv
