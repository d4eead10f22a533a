#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scoin/combinatorics/objects.hpp"
#include "scoin/exactalg/linalg.hpp"
#include "scoin/superspace/element.hpp"

namespace scoin::coinv {

using exact::RowEchelon;
using exact::SparseVec;
using super::SuperElement;
using super::SuperMonomial;

/// Generators of a bihomogeneous ideal. With bosonic_only the ambient ring is F[x_1..x_n].
struct IdealSpec {
  int n = 0;
  std::vector<SuperElement> generators;
  bool bosonic_only = false;
  std::string tag;

  /// (e_1..e_n, d e_1..d e_n) in the superspace ring.
  static IdealSpec superspace_coinvariant(int n);
  /// (e_1..e_n) in the polynomial ring.
  static IdealSpec classical_coinvariant(int n);
  /// Stable text of the generator list, used for content hashing.
  std::string canonical_text() const;
};

/// Memo for per-bidegree ranks (the harness supplies a persistent implementation).
class RankCache {
 public:
  virtual ~RankCache() = default;
  virtual std::optional<std::int64_t> lookup(const std::string& key) = 0;
  virtual void store(const std::string& key, std::int64_t value) = 0;
};

/// Linear algebra of a quotient Omega_n / I one bidegree at a time.
class QuotientEngine {
 public:
  virtual ~QuotientEngine() = default;
  virtual int n() const = 0;
  virtual bool bosonic_only() const = 0;
  /// Dimension of the coordinate space used for bidegree (i, j).
  virtual int ambient_dim(int i, int j) = 0;
  /// Coordinates of a bihomogeneous element of bidegree (i, j).
  virtual SparseVec coordinates(const SuperElement& f, int i, int j) = 0;
  /// Row echelon form of the ideal component in these coordinates (cached).
  virtual const RowEchelon& ideal_span(int i, int j) = 0;
  /// The element whose coordinate vector is the unit vector at column c.
  virtual SuperElement column_element(int i, int j, int c) = 0;
  virtual std::string name() const = 0;

  int quotient_dim(int i, int j) { return ambient_dim(i, j) - ideal_span(i, j).rank(); }
  /// Residual of f modulo the ideal component; zero iff f lies in the ideal.
  SparseVec reduce(const SuperElement& f, int i, int j) { return ideal_span(i, j).reduce(coordinates(f, i, j)); }
};

/// Coordinates are all monomials x^a theta_S of the bidegree; works for any ideal.
std::unique_ptr<QuotientEngine> make_full_engine(const IdealSpec& spec);
/// Works in R_n (x) wedge with R_n = F[x]/(e_1..e_n) in Artin normal form; only for the
/// superspace coinvariant ideal. Throws std::invalid_argument for other specs.
std::unique_ptr<QuotientEngine> make_artin_engine(int n);

/// Every monomial x^a theta_S of bidegree (i, j) in a fixed order (bosonic_only: j must be 0).
std::vector<SuperMonomial> monomial_basis(int n, int i, int j);
/// Rows m * g over generators g and monomials m of complementary bidegree, in the monomial basis.
exact::SparseMatrix ideal_component(const IdealSpec& spec, int i, int j);

/// Artin normal form modulo (e_1..e_n): memoized reduction of x-monomials to the basis
/// {x^a : a_i < i}, using the rewriting x_k^k -> x_k^k - h_k(x_k..x_n).
class ArtinReducer {
 public:
  explicit ArtinReducer(int n);
  int n() const { return n_; }
  /// Artin monomials of degree d, lexicographic; index within the degree is the coordinate.
  const std::vector<exact::Exponent>& basis(int d) const;
  int max_degree() const { return n_ * (n_ - 1) / 2; }
  /// Normal form of x^e as (index within degree |e|, coefficient) pairs.
  const SparseVec& normal_form(const exact::Exponent& e);

 private:
  int n_;
  std::vector<std::vector<exact::Exponent>> by_degree_;
  std::map<exact::Exponent, int> index_;
  std::map<exact::Exponent, SparseVec> memo_;
  std::vector<exact::MPoly> tails_;  // x_k^k - h_k(x_k..x_n), 0-based k
};

}  // namespace scoin::coinv
