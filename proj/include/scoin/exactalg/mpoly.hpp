#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scoin/exactalg/rational.hpp"

namespace scoin::exact {

/// Upper bound on the number of variables of any polynomial (x_1..x_8 plus y_1..y_8).
inline constexpr int kMaxVars = 16;

/// Exponent vector stored inline; entries beyond nvars are always zero.
class Exponent {
 public:
  Exponent() { e_.fill(0); }
  explicit Exponent(std::span<const int> exps);

  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  void add(int i, int delta) { set(i, e_[static_cast<std::size_t>(i)] + delta); }

  int degree() const;
  /// Componentwise sum; throws std::overflow_error past 255.
  Exponent operator+(const Exponent& o) const;
  bool divides(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;

  std::vector<int> to_vector(int nvars) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
};

/// Sparse multivariate polynomial with rational coefficients; no zero terms are stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars);

  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, const Exponent& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponent& e) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(int k) const;
  /// Partial derivative with respect to variable index (0-based).
  MPoly derivative(int var, int times = 1) const;
  /// Applies the differential operator p(d/dx_1, ..., d/dx_n) to g.
  MPoly apply_as_operator(const MPoly& g) const;
  /// Replaces variable i by images[i]; images must cover every variable that occurs.
  MPoly substitute(std::span<const MPoly> images) const;
  /// Same polynomial viewed in a ring with a different variable count.
  MPoly with_nvars(int nvars) const;
  /// Applies the variable permutation var i -> perm[i] (0-based).
  MPoly permute_vars(std::span<const int> perm) const;

  /// Exact division; std::nullopt when the divisor does not divide.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  /// Rendering such as "3*x1^2*x3 - y2"; names[i] is the name of variable i.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Names x1..xn.
std::vector<std::string> x_names(int n);

/// Elementary symmetric polynomial e_d in the given variables (0-based indices).
MPoly elementary(int nvars, std::span<const int> vars, int d);
/// Complete homogeneous polynomial h_d in the given variables.
MPoly complete_homogeneous(int nvars, std::span<const int> vars, int d);

}  // namespace scoin::exact
