#include "scoin/exactalg/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace scoin::exact {

Exponent::Exponent(std::span<const int> exps) {
  e_.fill(0);
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("Exponent: too many variables");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

void Exponent::set(int i, int value) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("Exponent: variable index out of range");
  if (value < 0 || value > 255) throw std::overflow_error("Exponent: exponent out of range");
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
}

int Exponent::degree() const {
  int d = 0;
  for (auto v : e_) d += v;
  return d;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r;
  for (int i = 0; i < kMaxVars; ++i) r.set(i, (*this)[i] + o[i]);
  return r;
}

bool Exponent::divides(const Exponent& o) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if ((*this)[i] > o[i]) return false;
  }
  return true;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r;
  for (int i = 0; i < kMaxVars; ++i) r.set(i, (*this)[i] - o[i]);
  return r;
}

std::vector<int> Exponent::to_vector(int nvars) const {
  std::vector<int> v(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) v[static_cast<std::size_t>(i)] = (*this)[i];
  return v;
}

MPoly::MPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("MPoly: bad variable count");
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("MPoly::variable: index out of range");
  Exponent e;
  e.set(index, 1);
  return monomial(nvars, e);
}

MPoly MPoly::monomial(int nvars, const Exponent& e, const Rational& c) {
  MPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [e, c] : terms_) {
    if (e.degree() != d) return false;
  }
  return true;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

MPoly MPoly::derivative(int var, int times) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int a = e[var];
    if (a < times) continue;
    Rational f = c;
    for (int t = 0; t < times; ++t) f *= (a - t);
    Exponent ne = e;
    ne.set(var, a - times);
    r.add_term(ne, f);
  }
  return r;
}

MPoly MPoly::apply_as_operator(const MPoly& g) const {
  MPoly r(std::max(nvars_, g.nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : g.terms_) {
      if (!ea.divides(eb)) continue;
      Rational f = ca * cb;
      for (int i = 0; i < kMaxVars; ++i) {
        for (int t = 0; t < ea[i]; ++t) f *= (eb[i] - t);
      }
      r.add_term(eb - ea, f);
    }
  }
  return r;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  int nv = 0;
  for (const auto& p : images) nv = std::max(nv, p.nvars());
  MPoly r(nv);
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(nv, c);
    for (int i = 0; i < kMaxVars; ++i) {
      int a = e[i];
      if (a == 0) continue;
      if (static_cast<std::size_t>(i) >= images.size()) {
        throw std::invalid_argument("MPoly::substitute: assignment does not cover variable");
      }
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.push_back(constant(nv, 1));
      while (static_cast<int>(pw.size()) <= a) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
      t = t * pw[static_cast<std::size_t>(a)];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::with_nvars(int nvars) const {
  MPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    for (int i = nvars; i < kMaxVars; ++i) {
      if (e[i] != 0) throw std::invalid_argument("MPoly::with_nvars: variable would be dropped");
    }
    r.terms_.emplace(e, c);
  }
  return r;
}

MPoly MPoly::permute_vars(std::span<const int> perm) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) ne.set(perm[static_cast<std::size_t>(i)], e[i]);
    }
    r.add_term(ne, c);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MPoly::divide_exact: division by zero");
  const auto& [dlt, dlc] = *divisor.terms_.rbegin();
  MPoly q(std::max(nvars_, divisor.nvars_));
  MPoly r = *this;
  while (!r.is_zero()) {
    const auto& [rlt, rlc] = *r.terms_.rbegin();
    if (!dlt.divides(rlt)) return std::nullopt;
    MPoly t = monomial(q.nvars(), rlt - dlt, rlc / dlc);
    q += t;
    r -= t * divisor;
  }
  return q;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || e.degree() == 0) {
      os << mag.to_string();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                        : "v" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::string MPoly::to_string() const {
  auto names = x_names(kMaxVars);
  return to_string(names);
}

std::vector<std::string> x_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

MPoly elementary(int nvars, std::span<const int> vars, int d) {
  // e_d by the product expansion of prod (1 + t x_v), tracking the t-degree
  std::vector<MPoly> layer(static_cast<std::size_t>(d) + 1, MPoly(nvars));
  if (d < 0) return MPoly(nvars);
  layer[0] = MPoly::constant(nvars, 1);
  for (int v : vars) {
    MPoly xv = MPoly::variable(nvars, v);
    for (int k = d; k >= 1; --k) {
      layer[static_cast<std::size_t>(k)] += layer[static_cast<std::size_t>(k - 1)] * xv;
    }
  }
  return layer[static_cast<std::size_t>(d)];
}

MPoly complete_homogeneous(int nvars, std::span<const int> vars, int d) {
  if (d < 0) return MPoly(nvars);
  std::vector<MPoly> layer(static_cast<std::size_t>(d) + 1, MPoly(nvars));
  layer[0] = MPoly::constant(nvars, 1);
  for (int v : vars) {
    MPoly xv = MPoly::variable(nvars, v);
    for (int k = 1; k <= d; ++k) {
      layer[static_cast<std::size_t>(k)] += layer[static_cast<std::size_t>(k - 1)] * xv;
    }
  }
  return layer[static_cast<std::size_t>(d)];
}

}  // namespace scoin::exact
