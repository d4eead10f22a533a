#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/exactalg/mpoly.hpp"
#include "scoin/exactalg/rational.hpp"

namespace scoin::super {

using exact::Exponent;
using exact::MPoly;
using exact::Rational;

/// x^exps times the product of theta_i (i in the mask) taken in increasing order.
struct SuperMonomial {
  Exponent exps;
  std::uint32_t thetas = 0;  // bit i-1 set for theta_i

  int bosonic_degree() const { return exps.degree(); }
  int fermionic_degree() const { return __builtin_popcount(thetas); }

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
  friend std::strong_ordering operator<=>(const SuperMonomial& a, const SuperMonomial& b) {
    if (auto c = a.exps <=> b.exps; c != 0) return c;
    return a.thetas <=> b.thetas;
  }
};

/// Sign of theta_S * theta_T rewritten in increasing order; 0 when S and T meet.
int koszul_sign(std::uint32_t s, std::uint32_t t);

/// Sparse element of the superspace ring in n commuting and n anticommuting variables.
class SuperElement {
 public:
  using TermMap = std::map<SuperMonomial, Rational>;

  SuperElement() = default;
  explicit SuperElement(int n);
  static SuperElement constant(int n, const Rational& c);
  static SuperElement x(int n, int i);      // 1-based
  static SuperElement theta(int n, int i);  // 1-based
  static SuperElement monomial(int n, const SuperMonomial& m, const Rational& c = 1);
  /// theta_{s_1} ... theta_{s_r} in the given order (the sign is absorbed).
  static SuperElement theta_product(int n, std::span<const int> order);
  /// A polynomial in x_1..x_n (variable i-1 of p is x_i).
  static SuperElement from_poly(int n, const MPoly& p);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const SuperMonomial& m) const;
  void add_term(const SuperMonomial& m, const Rational& c);

  bool is_bihomogeneous() const;
  /// Bidegree of the first term; throws std::logic_error on the zero element.
  std::pair<int, int> bidegree() const;
  SuperElement component(int bosonic, int fermionic) const;
  /// Coefficient of theta_S as a polynomial in x_1..x_n.
  MPoly theta_coefficient(std::uint32_t mask) const;
  /// Purely bosonic part as a polynomial (nvars = n).
  MPoly to_poly() const;

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const Rational& c);
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(SuperElement a, const Rational& c) { return a *= c; }
  friend SuperElement operator*(const Rational& c, SuperElement a) { return a *= c; }
  SuperElement operator-() const;
  friend bool operator==(const SuperElement& a, const SuperElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Rendering like "3*x1^2*x3*t2*t4 - 1/2*t1"; "0" for zero.
  std::string to_string() const;
  /// Inverse of to_string. Theta factors may come in any order; throws std::invalid_argument.
  static SuperElement parse(int n, std::string_view text);

 private:
  int n_ = 0;
  TermMap terms_;
};

SuperElement mul(const SuperElement& f, const SuperElement& g);
inline SuperElement operator*(const SuperElement& f, const SuperElement& g) { return mul(f, g); }

/// Diagonal action w.x_i = x_{w(i)}, w.theta_i = theta_{w(i)}; w is a 0-based image vector.
SuperElement act(const comb::Permutation& w, const SuperElement& f);

/// Contraction by theta_i: removes theta_i = theta_{j_s} with sign (-1)^{s-1}.
SuperElement contract_theta(int i, const SuperElement& f);
SuperElement partial_x(int i, const SuperElement& f, int times = 1);

/// f (.) g: each monomial x^a theta_{s_1 < ... < s_r} of f acts as
/// d^a o c_{s_1} o ... o c_{s_r}, contractions applied right to left.
SuperElement odot(const SuperElement& f, const SuperElement& g);

/// d_j(f) = sum_i theta_i * (d/dx_i)^j f.
SuperElement euler_d(int j, const SuperElement& f);
/// d_{k_1} ... d_{k_r} f with the rightmost operator applied first.
SuperElement euler_chain(std::span<const int> ks, const SuperElement& f);

/// Signed sum over the parabolic subgroup of mu.
SuperElement antisymmetrize(const comb::Partition& mu, const SuperElement& f);

SuperElement vandermonde(int n);
/// eps_n applied to x_2^1 ... x_k^{k-1} x_{k+1}^{k-1} ... x_n^{k-1} theta_{k+1} ... theta_n.
SuperElement super_vandermonde(int n, int k);
/// x_j times prod_{i > j} (x_j - x_i), multiplied over j in J.
SuperElement f_J(const comb::Subset& J);
MPoly f_J_poly(const comb::Subset& J);
/// e_d(x_1..x_n).
SuperElement elementary(int n, int d);
/// e_1, ..., e_n followed by d_1 e_1, ..., d_1 e_n.
std::vector<SuperElement> coinvariant_generators(int n);

}  // namespace scoin::super
