#include "scoin/combinatorics/qzpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>
#include <stdexcept>

namespace scoin::comb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // r * (a - b + i) is divisible by i
    r = checked_mul(r, a - b + i) / i;
  }
  return r;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

QZPoly::QZPoly(std::int64_t c) {
  if (c != 0) terms_[{0, 0}] = c;
}

QZPoly QZPoly::monomial(int qexp, int zexp, std::int64_t c) {
  if (qexp < 0 || zexp < 0) throw std::invalid_argument("QZPoly: negative exponent");
  QZPoly p;
  p.add_term(qexp, zexp, c);
  return p;
}

std::int64_t QZPoly::coefficient(int qexp, int zexp) const {
  auto it = terms_.find({qexp, zexp});
  return it == terms_.end() ? 0 : it->second;
}

void QZPoly::add_term(int qexp, int zexp, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({qexp, zexp}, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

QZPoly& QZPoly::operator+=(const QZPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

QZPoly& QZPoly::operator-=(const QZPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, checked_mul(c, -1));
  return *this;
}

QZPoly operator*(const QZPoly& a, const QZPoly& b) {
  QZPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ca, cb));
    }
  }
  return r;
}

QZPoly QZPoly::operator-() const {
  QZPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = checked_mul(c, -1);
  return r;
}

std::int64_t QZPoly::eval(std::int64_t q, std::int64_t z) const {
  std::int64_t total = 0;
  for (const auto& [k, c] : terms_) {
    std::int64_t t = c;
    for (int i = 0; i < k.first; ++i) t = checked_mul(t, q);
    for (int i = 0; i < k.second; ++i) t = checked_mul(t, z);
    total = checked_add(total, t);
  }
  return total;
}

QZPoly QZPoly::z_slice(int j) const {
  QZPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.second == j) r.terms_[{k.first, 0}] = c;
  }
  return r;
}

bool QZPoly::nonnegative() const {
  for (const auto& [k, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

int QZPoly::max_q_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int QZPoly::max_z_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

namespace {

std::string render(const std::map<QZPoly::Key, std::int64_t>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // z-degree major, then q ascending
  std::vector<std::pair<QZPoly::Key, std::int64_t>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  for (const auto& [k, c] : sorted) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = k.first == 0 && k.second == 0;
    if (mag != 1 || unit) os << mag;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      os << name;
      if (e > 1) os << (latex ? "^{" : "^") << e << (latex ? "}" : "");
    };
    var("z", k.second);
    var("q", k.first);
  }
  return os.str();
}

}  // namespace

std::string QZPoly::to_string() const { return render(terms_, false); }
std::string QZPoly::to_latex() const { return render(terms_, true); }

QZPoly q_integer(int k) {
  QZPoly r;
  for (int i = 0; i < k; ++i) r.add_term(i, 0, 1);
  return r;
}

QZPoly q_factorial(int k) {
  QZPoly r(1);
  for (int i = 2; i <= k; ++i) r *= q_integer(i);
  return r;
}

QZPoly q_binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return {};
  // Pascal: [a,b] = [a-1,b-1] + q^b [a-1,b]
  std::vector<QZPoly> row{QZPoly(1)};
  for (int m = 1; m <= a; ++m) {
    std::vector<QZPoly> next(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) {
      QZPoly v;
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
      if (j <= m - 1) v += QZPoly::q_power(j) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

}  // namespace scoin::comb
