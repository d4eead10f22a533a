#include "scoin/superspace/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "scoin/combinatorics/enumerate.hpp"

namespace scoin::super {

namespace {

std::uint32_t bit(int i) { return 1u << (i - 1); }

// Number of set bits of u strictly below position i (1-based).
int below(std::uint32_t u, int i) { return __builtin_popcount(u & (bit(i) - 1)); }

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("superspace: variable index out of range");
}

}  // namespace

int koszul_sign(std::uint32_t s, std::uint32_t t) {
  if (s & t) return 0;
  // count pairs (a in S, b in T) with a > b
  int inv = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    int b = __builtin_ctz(rest) + 1;
    inv += __builtin_popcount(s >> b);
  }
  return inv % 2 ? -1 : 1;
}

SuperElement::SuperElement(int n) : n_(n) {
  if (n < 0 || n > exact::kMaxVars) throw std::invalid_argument("SuperElement: n out of range");
}

SuperElement SuperElement::constant(int n, const Rational& c) {
  SuperElement e(n);
  e.add_term({}, c);
  return e;
}

SuperElement SuperElement::x(int n, int i) {
  check_index(n, i);
  SuperMonomial m;
  m.exps.set(i - 1, 1);
  return monomial(n, m);
}

SuperElement SuperElement::theta(int n, int i) {
  check_index(n, i);
  SuperMonomial m;
  m.thetas = bit(i);
  return monomial(n, m);
}

SuperElement SuperElement::monomial(int n, const SuperMonomial& m, const Rational& c) {
  SuperElement e(n);
  e.add_term(m, c);
  return e;
}

SuperElement SuperElement::theta_product(int n, std::span<const int> order) {
  SuperElement e = constant(n, 1);
  for (int i : order) e = mul(e, theta(n, i));
  return e;
}

SuperElement SuperElement::from_poly(int n, const MPoly& p) {
  SuperElement e(n);
  for (const auto& [ex, c] : p.terms()) {
    for (int i = n; i < exact::kMaxVars; ++i) {
      if (ex[i] != 0) throw std::invalid_argument("SuperElement::from_poly: variable beyond x_n");
    }
    e.add_term({ex, 0}, c);
  }
  return e;
}

Rational SuperElement::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperElement::add_term(const SuperMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SuperElement::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  auto d = bidegree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.bosonic_degree() == d.first && t.first.fermionic_degree() == d.second;
  });
}

std::pair<int, int> SuperElement::bidegree() const {
  if (terms_.empty()) throw std::logic_error("SuperElement::bidegree: zero element");
  const auto& m = terms_.begin()->first;
  return {m.bosonic_degree(), m.fermionic_degree()};
}

SuperElement SuperElement::component(int bosonic, int fermionic) const {
  SuperElement r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.bosonic_degree() == bosonic && m.fermionic_degree() == fermionic) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

MPoly SuperElement::theta_coefficient(std::uint32_t mask) const {
  MPoly p(n_);
  for (const auto& [m, c] : terms_) {
    if (m.thetas == mask) p.add_term(m.exps, c);
  }
  return p;
}

MPoly SuperElement::to_poly() const { return theta_coefficient(0); }

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("SuperElement: mismatched n");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("SuperElement: mismatched n");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperElement SuperElement::operator-() const {
  SuperElement r = *this;
  return r *= Rational(-1);
}

std::string SuperElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (!mag.is_one()) factors.push_back(mag.to_string());
    for (int i = 0; i < n_; ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      factors.push_back("x" + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    for (int i = 1; i <= n_; ++i) {
      if (m.thetas & bit(i)) factors.push_back("t" + std::to_string(i));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

SuperElement SuperElement::parse(int n, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("SuperElement::parse: empty input");
  SuperElement out(n);
  if (s == "0") return out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("SuperElement::parse: " + why + " in '" + std::string(text) + "'");
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected sign");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) fail("empty term");
    Rational coef(sign);
    SuperMonomial m;
    std::vector<int> theta_order;
    std::stringstream ts(term);
    std::string factor;
    while (std::getline(ts, factor, '*')) {
      if (factor.empty()) fail("empty factor");
      if (factor[0] == 'x' || factor[0] == 't') {
        std::size_t caret = factor.find('^');
        int idx = 0, e = 1;
        try {
          idx = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        } catch (const std::exception&) {
          fail("bad variable '" + factor + "'");
        }
        if (idx < 1 || idx > n || e < 0) fail("variable out of range '" + factor + "'");
        if (factor[0] == 'x') {
          m.exps.add(idx - 1, e);
        } else {
          if (e != 1) fail("theta powers are not allowed");
          theta_order.push_back(idx);
        }
      } else {
        coef *= Rational::parse(factor);
      }
    }
    SuperElement th = theta_product(n, theta_order);
    for (const auto& [tm, tc] : th.terms()) {
      SuperMonomial full = m;
      full.thetas = tm.thetas;
      out.add_term(full, coef * tc);
    }
  }
  return out;
}

SuperElement mul(const SuperElement& f, const SuperElement& g) {
  if (f.n() != g.n()) throw std::invalid_argument("mul: mismatched n");
  SuperElement r(f.n());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      int s = koszul_sign(a.thetas, b.thetas);
      if (s == 0) continue;
      SuperMonomial m{a.exps + b.exps, a.thetas | b.thetas};
      Rational c = ca * cb;
      r.add_term(m, s > 0 ? c : -c);
    }
  }
  return r;
}

SuperElement act(const comb::Permutation& w, const SuperElement& f) {
  if (static_cast<int>(w.size()) != f.n()) throw std::invalid_argument("act: permutation size mismatch");
  int n = f.n();
  SuperElement r(n);
  for (const auto& [m, c] : f.terms()) {
    SuperMonomial img;
    for (int i = 0; i < n; ++i) img.exps.set(w[static_cast<std::size_t>(i)], m.exps[i]);
    // theta_{w(s_1)} ... theta_{w(s_r)}: sign of sorting the image sequence
    std::vector<int> seq;
    for (int i = 1; i <= n; ++i) {
      if (m.thetas & bit(i)) seq.push_back(w[static_cast<std::size_t>(i - 1)] + 1);
    }
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a) {
      for (std::size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b] ? 1 : 0;
      img.thetas |= bit(seq[a]);
    }
    r.add_term(img, inv % 2 ? -c : c);
  }
  return r;
}

SuperElement contract_theta(int i, const SuperElement& f) {
  check_index(f.n(), i);
  SuperElement r(f.n());
  for (const auto& [m, c] : f.terms()) {
    if (!(m.thetas & bit(i))) continue;
    SuperMonomial out{m.exps, m.thetas & ~bit(i)};
    r.add_term(out, below(m.thetas, i) % 2 ? -c : c);
  }
  return r;
}

SuperElement partial_x(int i, const SuperElement& f, int times) {
  check_index(f.n(), i);
  SuperElement r(f.n());
  for (const auto& [m, c] : f.terms()) {
    int e = m.exps[i - 1];
    if (e < times) continue;
    Rational k = c;
    for (int t = 0; t < times; ++t) k *= e - t;
    SuperMonomial out = m;
    out.exps.set(i - 1, e - times);
    r.add_term(out, k);
  }
  return r;
}

SuperElement odot(const SuperElement& f, const SuperElement& g) {
  if (f.n() != g.n()) throw std::invalid_argument("odot: mismatched n");
  int n = f.n();
  SuperElement r(n);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      if ((a.thetas & b.thetas) != a.thetas || !a.exps.divides(b.exps)) continue;
      // contractions from the largest index of S down to the smallest
      int sign = 1;
      std::uint32_t u = b.thetas;
      for (int s = n; s >= 1; --s) {
        if (!(a.thetas & bit(s))) continue;
        if (below(u, s) % 2) sign = -sign;
        u &= ~bit(s);
      }
      Rational k = ca * cb;
      for (int i = 0; i < n; ++i) {
        for (int t = 0; t < a.exps[i]; ++t) k *= b.exps[i] - t;
      }
      r.add_term({b.exps - a.exps, u}, sign > 0 ? k : -k);
    }
  }
  return r;
}

SuperElement euler_d(int j, const SuperElement& f) {
  if (j < 1) throw std::invalid_argument("euler_d: j must be positive");
  int n = f.n();
  SuperElement r(n);
  for (int i = 1; i <= n; ++i) r += mul(SuperElement::theta(n, i), partial_x(i, f, j));
  return r;
}

SuperElement euler_chain(std::span<const int> ks, const SuperElement& f) {
  SuperElement r = f;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) r = euler_d(*it, r);
  return r;
}

SuperElement antisymmetrize(const comb::Partition& mu, const SuperElement& f) {
  if (mu.size() != f.n()) throw std::invalid_argument("antisymmetrize: partition size differs from n");
  SuperElement r(f.n());
  for (const auto& w : comb::parabolic_subgroup(mu)) {
    SuperElement img = act(w, f);
    if (comb::permutation_sign(w) < 0) r -= img;
    else r += img;
  }
  return r;
}

SuperElement vandermonde(int n) {
  SuperElement r(n);
  for (const auto& w : comb::all_permutations(n)) {
    // w applied to x_1^{n-1} x_2^{n-2} ... x_n^0
    SuperMonomial m;
    for (int i = 0; i < n; ++i) m.exps.set(w[static_cast<std::size_t>(i)], n - 1 - i);
    r.add_term(m, comb::permutation_sign(w));
  }
  return r;
}

SuperElement super_vandermonde(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("super_vandermonde: need 1 <= k <= n");
  SuperMonomial m;
  for (int i = 1; i <= n; ++i) m.exps.set(i - 1, i <= k ? i - 1 : k - 1);
  for (int i = k + 1; i <= n; ++i) m.thetas |= bit(i);
  return antisymmetrize(comb::Partition({n}), SuperElement::monomial(n, m));
}

MPoly f_J_poly(const comb::Subset& J) {
  int n = J.ambient();
  MPoly r = MPoly::constant(n, 1);
  for (int j : J.elems()) {
    r = r * MPoly::variable(n, j - 1);
    for (int i = j + 1; i <= n; ++i) r = r * (MPoly::variable(n, j - 1) - MPoly::variable(n, i - 1));
  }
  return r;
}

SuperElement f_J(const comb::Subset& J) { return SuperElement::from_poly(J.ambient(), f_J_poly(J)); }

SuperElement elementary(int n, int d) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i;
  return SuperElement::from_poly(n, exact::elementary(n, vars, d));
}

std::vector<SuperElement> coinvariant_generators(int n) {
  std::vector<SuperElement> gens;
  for (int d = 1; d <= n; ++d) gens.push_back(elementary(n, d));
  for (int d = 1; d <= n; ++d) gens.push_back(euler_d(1, elementary(n, d)));
  return gens;
}

}  // namespace scoin::super
