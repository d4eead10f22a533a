#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/combinatorics/objects.hpp"
#include "scoin/combinatorics/qzpoly.hpp"
#include "scoin/exactalg/mpoly.hpp"

namespace scoin::sym {

using comb::Partition;
using comb::QZPoly;

enum class Basis { m, e, s };
std::string_view to_string(Basis b);
Basis parse_basis(std::string_view name);

/// Homogeneous degree-n symmetric function with Z[q,z] coefficients in one of three bases.
class SymFn {
 public:
  using Coeffs = std::map<Partition, QZPoly>;

  SymFn() = default;
  SymFn(int degree, Basis basis);
  static SymFn basis_element(Basis basis, const Partition& lambda, const QZPoly& c = 1);

  int degree() const { return n_; }
  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const { return coeffs_; }
  QZPoly coefficient(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(const Partition& lambda, const QZPoly& c);

  SymFn& operator+=(const SymFn& o);
  SymFn& operator-=(const SymFn& o);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  /// Scalar multiplication by a polynomial in q, z.
  friend SymFn operator*(const QZPoly& c, const SymFn& f);
  /// Equality as symmetric functions, whatever the bases.
  friend bool operator==(const SymFn& a, const SymFn& b);

  /// Coefficientwise map over the coefficient polynomials (e.g. z-slices).
  SymFn z_slice(int j) const;
  /// Specialize q -> 1 and z -> 1.
  SymFn at_q1() const;

  /// "s_{21}*(1 + q) + s_{111}" style text.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  int n_ = 0;
  Basis basis_ = Basis::s;
  Coeffs coeffs_;
};

SymFn to_basis(const SymFn& f, Basis target);
QZPoly hall(const SymFn& f, const SymFn& g);
/// <f, e_mu> for |mu| = deg f.
QZPoly e_perp(const Partition& mu, const SymFn& f);
/// Adjoint of multiplication by e_1 = s_1: removes one box from every Schur index.
SymFn e1_perp(const SymFn& f);
SymFn omega(const SymFn& f);

/// Kostka matrix entry, memoized.
std::int64_t kostka_cached(const Partition& lambda, const Partition& mu);
/// Number of 0-1 matrices with row sums mu and column sums lambda (coefficient of m_lambda in e_mu).
std::int64_t e_to_m_coefficient(const Partition& mu, const Partition& lambda);

/// Schur expansion of C_{n,k}(x;q) via standard tableaux.
SymFn cnk_syt(int n, int k);
/// Monomial expansion of C_{n,k}(x;q) via ordered multiset partitions in n letters.
SymFn cnk_omp(int n, int k, comb::OmpStat stat);
/// Frobenius image of the sign-twisted permutation module on ordered set partitions with
/// k blocks, by orbit counting: every orbit is fixed by its block-size composition.
SymFn osp_sign_module(int n, int k);

/// Schur polynomial s_nu in the listed variables (0-based indices into nvars), by SSYT enumeration.
exact::MPoly schur_poly(const Partition& nu, int nvars, const std::vector<int>& vars);
/// The same polynomial as a quotient of alternants; requires length(nu) <= |vars|.
exact::MPoly schur_poly_bialternant(const Partition& nu, int nvars, const std::vector<int>& vars);

}  // namespace scoin::sym
