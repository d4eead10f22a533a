#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace scoin::comb {

/// Polynomial in q and z with integer coefficients. Arithmetic is overflow checked.
class QZPoly {
 public:
  using Key = std::pair<int, int>;  // (q-exponent, z-exponent)

  QZPoly() = default;
  QZPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  static QZPoly monomial(int qexp, int zexp, std::int64_t c = 1);
  static QZPoly q_power(int e) { return monomial(e, 0); }
  static QZPoly z_power(int e) { return monomial(0, e); }

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int qexp, int zexp) const;
  void add_term(int qexp, int zexp, std::int64_t c);

  QZPoly& operator+=(const QZPoly& o);
  QZPoly& operator-=(const QZPoly& o);
  friend QZPoly operator+(QZPoly a, const QZPoly& b) { return a += b; }
  friend QZPoly operator-(QZPoly a, const QZPoly& b) { return a -= b; }
  friend QZPoly operator*(const QZPoly& a, const QZPoly& b);
  QZPoly& operator*=(const QZPoly& o) { return *this = *this * o; }
  QZPoly operator-() const;
  friend bool operator==(const QZPoly&, const QZPoly&) = default;

  std::int64_t eval(std::int64_t q, std::int64_t z) const;
  /// Part of z-degree j, as a polynomial in q alone.
  QZPoly z_slice(int j) const;
  bool nonnegative() const;
  int max_q_degree() const;
  int max_z_degree() const;

  /// Human readable, e.g. "1 + 2q + z^2q".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::map<Key, std::int64_t> terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Ordinary binomial coefficient, zero outside 0 <= b <= a.
std::int64_t binomial(std::int64_t a, std::int64_t b);
std::int64_t factorial(int n);

QZPoly q_integer(int k);
QZPoly q_factorial(int k);
QZPoly q_binomial(int a, int b);

}  // namespace scoin::comb
