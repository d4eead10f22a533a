#include "scoin/coinvariant/engine.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/combinatorics/qzpoly.hpp"
#include "scoin/core/errors.hpp"

namespace scoin::coinv {

using exact::Exponent;
using exact::MPoly;
using exact::Rational;

namespace {

void exponents_rec(int n, int pos, int left, Exponent& cur, std::vector<Exponent>& out) {
  if (pos == n - 1) {
    cur.set(pos, left);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur.set(pos, a);
    exponents_rec(n, pos + 1, left - a, cur, out);
  }
  cur.set(pos, 0);
}

// Lexicographically descending exponent vectors of total degree d.
std::vector<Exponent> exponents_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur;
  exponents_rec(n, 0, d, cur, out);
  return out;
}

std::vector<std::uint32_t> masks_of_size(int n, int j) {
  std::vector<std::uint32_t> out;
  if (j < 0 || j > n) return out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == j) out.push_back(m);
  return out;
}

void check_generators(const IdealSpec& spec) {
  for (const auto& g : spec.generators) {
    if (g.n() != spec.n) throw std::invalid_argument("IdealSpec: generator has wrong variable count");
    if (g.is_zero() || !g.is_bihomogeneous())
      throw std::invalid_argument("IdealSpec: generators must be nonzero and bihomogeneous");
    if (spec.bosonic_only && g.bidegree().second != 0)
      throw std::invalid_argument("IdealSpec: bosonic ideal with a fermionic generator");
  }
}

// Calls emit(row element) for every m * g spanning the (i, j) component.
template <class Emit>
void for_each_ideal_product(const IdealSpec& spec, int i, int j, Emit&& emit) {
  for (const auto& g : spec.generators) {
    auto [a, b] = g.bidegree();
    if (a > i || b > j) continue;
    for (const auto& m : monomial_basis(spec.n, i - a, j - b)) emit(SuperElement::monomial(spec.n, m) * g);
  }
}

class FullEngine final : public QuotientEngine {
 public:
  explicit FullEngine(IdealSpec spec) : spec_(std::move(spec)) { check_generators(spec_); }

  int n() const override { return spec_.n; }
  bool bosonic_only() const override { return spec_.bosonic_only; }
  std::string name() const override { return "full"; }

  int ambient_dim(int i, int j) override { return static_cast<int>(component(i, j).basis.size()); }

  SparseVec coordinates(const SuperElement& f, int i, int j) override {
    auto& c = component(i, j);
    std::map<int, Rational> acc;
    for (const auto& [m, coef] : f.terms()) {
      auto it = c.index.find(m);
      if (it == c.index.end()) throw std::invalid_argument("coordinates: term outside bidegree " + f.to_string());
      acc[it->second] += coef;
    }
    return exact::make_sparse(acc);
  }

  const RowEchelon& ideal_span(int i, int j) override {
    auto& c = component(i, j);
    if (!c.ideal) {
      RowEchelon e;
      for_each_ideal_product(spec_, i, j, [&](const SuperElement& r) { e.insert(coordinates(r, i, j)); });
      c.ideal = std::move(e);
    }
    return *c.ideal;
  }

  SuperElement column_element(int i, int j, int col) override {
    return SuperElement::monomial(spec_.n, component(i, j).basis.at(static_cast<std::size_t>(col)));
  }

 private:
  struct Component {
    std::vector<SuperMonomial> basis;
    std::map<SuperMonomial, int> index;
    std::optional<RowEchelon> ideal;
  };

  Component& component(int i, int j) {
    auto [it, fresh] = comps_.try_emplace({i, j});
    if (fresh) {
      it->second.basis = spec_.bosonic_only && j != 0 ? std::vector<SuperMonomial>{} : monomial_basis(spec_.n, i, j);
      for (std::size_t k = 0; k < it->second.basis.size(); ++k)
        it->second.index.emplace(it->second.basis[k], static_cast<int>(k));
    }
    return it->second;
  }

  IdealSpec spec_;
  std::map<std::pair<int, int>, Component> comps_;
};

class ArtinEngine final : public QuotientEngine {
 public:
  explicit ArtinEngine(int n) : n_(n), reducer_(n), gens_(super::coinvariant_generators(n)) {
    for (int j = 0; j <= n; ++j) {
      masks_.push_back(masks_of_size(n, j));
      for (std::size_t k = 0; k < masks_.back().size(); ++k) mask_index_[masks_.back()[k]] = static_cast<int>(k);
    }
  }

  int n() const override { return n_; }
  bool bosonic_only() const override { return false; }
  std::string name() const override { return "artin"; }

  int ambient_dim(int i, int j) override {
    if (j < 0 || j > n_ || i < 0) return 0;
    if (i > reducer_.max_degree()) {
      // Above the top Artin degree every x-monomial must reduce to zero; check rather than assume.
      if (vanishing_checked_.insert(i).second) {
        for (const auto& e : exponents_of_degree(n_, i))
          if (!reducer_.normal_form(e).empty())
            throw IntegrityError("Artin reduction leaves a nonzero monomial in degree " + std::to_string(i));
      }
      return 0;
    }
    return static_cast<int>(reducer_.basis(i).size() * masks_[static_cast<std::size_t>(j)].size());
  }

  SparseVec coordinates(const SuperElement& f, int i, int j) override {
    const int width = static_cast<int>(masks_[static_cast<std::size_t>(j)].size());
    std::map<int, Rational> acc;
    for (const auto& [m, coef] : f.terms()) {
      if (m.bosonic_degree() != i || m.fermionic_degree() != j)
        throw std::invalid_argument("coordinates: term outside bidegree " + f.to_string());
      const int s = mask_index_.at(m.thetas);
      for (const auto& [idx, c] : reducer_.normal_form(m.exps)) acc[idx * width + s] += coef * c;
    }
    return exact::make_sparse(acc);
  }

  // In R_n (x) wedge the ideal is generated by the images of d e_1..d e_n, so the
  // component is spanned by b * theta_T * d e_d with b running over Artin monomials.
  const RowEchelon& ideal_span(int i, int j) override {
    auto [it, fresh] = spans_.try_emplace({i, j});
    if (!fresh) return it->second;
    if (ambient_dim(i, j) == 0) return it->second;
    for (int d = 1; d <= n_; ++d) {
      const int bdeg = i - (d - 1);
      if (bdeg < 0 || bdeg > reducer_.max_degree() || j < 1) continue;
      const auto& gen = gens_[static_cast<std::size_t>(n_ + d - 1)];
      for (const auto& b : reducer_.basis(bdeg)) {
        for (std::uint32_t t : masks_[static_cast<std::size_t>(j - 1)]) {
          SuperMonomial m{b, t};
          it->second.insert(coordinates(SuperElement::monomial(n_, m) * gen, i, j));
        }
      }
    }
    return it->second;
  }

  SuperElement column_element(int i, int j, int col) override {
    const int width = static_cast<int>(masks_[static_cast<std::size_t>(j)].size());
    SuperMonomial m{reducer_.basis(i).at(static_cast<std::size_t>(col / width)),
                    masks_[static_cast<std::size_t>(j)][static_cast<std::size_t>(col % width)]};
    return SuperElement::monomial(n_, m);
  }

 private:
  int n_;
  ArtinReducer reducer_;
  std::vector<SuperElement> gens_;
  std::vector<std::vector<std::uint32_t>> masks_;
  std::map<std::uint32_t, int> mask_index_;
  std::map<std::pair<int, int>, RowEchelon> spans_;
  std::set<int> vanishing_checked_;
};

}  // namespace

IdealSpec IdealSpec::superspace_coinvariant(int n) {
  return IdealSpec{n, super::coinvariant_generators(n), false, "SI"};
}

IdealSpec IdealSpec::classical_coinvariant(int n) {
  IdealSpec s{n, {}, true, "I"};
  for (int d = 1; d <= n; ++d) s.generators.push_back(super::elementary(n, d));
  return s;
}

std::string IdealSpec::canonical_text() const {
  std::ostringstream os;
  os << "n=" << n << ";tag=" << tag << ";bosonic=" << bosonic_only;
  for (const auto& g : generators) os << ";" << g.to_string();
  return os.str();
}

std::vector<SuperMonomial> monomial_basis(int n, int i, int j) {
  std::vector<SuperMonomial> out;
  const auto masks = masks_of_size(n, j);
  for (const auto& e : exponents_of_degree(n, i))
    for (std::uint32_t m : masks) out.push_back({e, m});
  return out;
}

exact::SparseMatrix ideal_component(const IdealSpec& spec, int i, int j) {
  check_generators(spec);
  const auto basis = spec.bosonic_only && j != 0 ? std::vector<SuperMonomial>{} : monomial_basis(spec.n, i, j);
  std::map<SuperMonomial, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], static_cast<int>(k));
  exact::SparseMatrix mat(static_cast<int>(basis.size()));
  if (basis.empty()) return mat;
  for_each_ideal_product(spec, i, j, [&](const SuperElement& r) {
    std::map<int, Rational> acc;
    for (const auto& [m, c] : r.terms()) acc[index.at(m)] += c;
    mat.add_row(exact::make_sparse(acc));
  });
  return mat;
}

std::unique_ptr<QuotientEngine> make_full_engine(const IdealSpec& spec) { return std::make_unique<FullEngine>(spec); }

std::unique_ptr<QuotientEngine> make_artin_engine(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("make_artin_engine: n out of range");
  return std::make_unique<ArtinEngine>(n);
}

ArtinReducer::ArtinReducer(int n) : n_(n) {
  by_degree_.resize(static_cast<std::size_t>(max_degree() + 1));
  for (const auto& a : comb::enumerate_artin(n)) {
    Exponent e(a);
    by_degree_[static_cast<std::size_t>(e.degree())].push_back(e);
  }
  for (auto& v : by_degree_) {
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k < v.size(); ++k) index_[v[k]] = static_cast<int>(k);
  }
  for (int k = 0; k < n; ++k) {
    std::vector<int> vars;
    for (int v = k; v < n; ++v) vars.push_back(v);
    Exponent lead;
    lead.set(k, k + 1);
    tails_.push_back(MPoly::monomial(n, lead) - exact::complete_homogeneous(n, vars, k + 1));
  }
}

const std::vector<Exponent>& ArtinReducer::basis(int d) const {
  static const std::vector<Exponent> empty;
  if (d < 0 || d > max_degree()) return empty;
  return by_degree_[static_cast<std::size_t>(d)];
}

const SparseVec& ArtinReducer::normal_form(const Exponent& e) {
  if (auto it = memo_.find(e); it != memo_.end()) return it->second;
  SparseVec result;
  int k = 0;
  while (k < n_ && e[k] <= k) ++k;
  if (k == n_) {
    result.emplace_back(index_.at(e), Rational(1));
  } else {
    // x_k^{k+1} is the leading term of h_{k+1}(x_k..x_n); trade it for the lex-smaller tail.
    Exponent rest = e;
    rest.add(k, -(k + 1));
    std::map<int, Rational> acc;
    for (const auto& [t, c] : tails_[static_cast<std::size_t>(k)].terms()) {
      const SparseVec& sub = normal_form(rest + t);
      for (const auto& [idx, v] : sub) acc[idx] += c * v;
    }
    result = exact::make_sparse(acc);
  }
  return memo_.emplace(e, std::move(result)).first->second;
}

}  // namespace scoin::coinv
