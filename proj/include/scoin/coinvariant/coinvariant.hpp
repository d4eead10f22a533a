#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "scoin/coinvariant/engine.hpp"
#include "scoin/combinatorics/qzpoly.hpp"
#include "scoin/core/verdict.hpp"
#include "scoin/symfunc/symfn.hpp"

namespace scoin::coinv {

using Bidegree = std::pair<int, int>;  // (bosonic i, fermionic j)

/// Nonnegative integers indexed by bidegree; absent entries are zero.
struct BidegreeTable {
  int n = 0;
  std::map<Bidegree, std::int64_t> dims;

  std::int64_t at(int i, int j) const;
  std::int64_t total() const;
  /// sum of dims(i,j) q^i z^j
  comb::QZPoly to_qz() const;
  /// Drops zero entries so tables compare by content.
  BidegreeTable normalized() const;
  friend bool operator==(const BidegreeTable& a, const BidegreeTable& b);
};

/// Schur-expanded graded Frobenius characteristic, one SymFn per bidegree.
struct FrobeniusTable {
  int n = 0;
  std::map<Bidegree, sym::SymFn> entries;
  /// sum of entries(i,j) q^i z^j as one SymFn with (q,z) coefficients.
  sym::SymFn total() const;
};

/// Configurable limits; the CLI may raise them.
struct EngineCaps {
  int hilbert = 5;
  int frobenius = 4;
  int closure = 4;
  /// Refuse jobs whose projected (rows x columns) summed over bidegrees exceeds this.
  std::int64_t matrix_cells = 400'000'000;
};
EngineCaps& engine_caps();

enum class EngineKind { automatic, full, artin };

struct HilbertOptions {
  EngineKind engine = EngineKind::automatic;
  int jobs = 1;
  RankCache* cache = nullptr;
};

/// Engine used when the caller does not pick one: the Artin-reduced engine for the
/// superspace coinvariant ideal, the full engine otherwise.
std::unique_ptr<QuotientEngine> make_engine(const IdealSpec& spec, EngineKind kind = EngineKind::automatic);
/// Projected rows x columns of the full engine over all bidegrees up to the bound.
std::int64_t estimate_full_cells(const IdealSpec& spec);

/// dim Omega_{i,j} - rank of the ideal for j <= n, i <= binom(n,2) + 2. The two rows above
/// binom(n,2) must vanish; otherwise IntegrityError.
BidegreeTable quotient_hilbert(const IdealSpec& spec, const HilbertOptions& opts = {});

/// Kernel of g -> (generator (.) g) on bidegree (i, j).
std::vector<SuperElement> harmonic_basis(const IdealSpec& spec, int i, int j);

/// Dimensions of the smallest space containing delta_n closed under d_1..d_{n-1} and d/dx_1..d/dx_n.
BidegreeTable operator_closure(int n);

/// f_J (.) delta_n as a polynomial.
exact::MPoly colon_generator(const comb::Subset& J);
/// g in (I_n : f_J), decided by (g f_J) (.) delta_n == 0.
bool colon_membership(const exact::MPoly& g, const comb::Subset& J);
/// Graded dimensions of F[x]/(I_n : f_J), indexed by degree.
std::vector<std::int64_t> colon_hilbert(const comb::Subset& J);
/// The Artin monomials of J descend to a basis of F[x]/(I_n : f_J).
Verdict verify_colon_basis(const comb::Subset& J);
/// {g f_J (.) delta_n} is linearly independent.
bool steinberg_independence(const std::vector<exact::MPoly>& gs, const comb::Subset& J);

/// {x^a theta_J : a in A_n(J)} is a basis of SR_n, checked bidegree by bidegree.
Verdict verify_artin_basis(QuotientEngine& engine);
Verdict verify_artin_basis(int n);

/// dim eps_mu (SR_n)_{i,j} for every bidegree.
BidegreeTable epsilon_dims(QuotientEngine& engine, const comb::Partition& mu);
BidegreeTable epsilon_dims(const comb::Partition& mu);

/// The elements eps_mu (x^a theta_{J(mu,gamma)}) over all gamma are a basis of eps_mu SR_n.
Verdict verify_parabolic_basis(QuotientEngine& engine, const comb::Partition& mu);
Verdict verify_parabolic_basis(const comb::Partition& mu);

/// Solves sum_lambda c_lambda K_{lambda', mu} = epsilon_dims(mu) per bidegree.
/// Throws IntegrityError on a non-integral or negative coefficient.
FrobeniusTable frobenius_reconstruct(QuotientEngine& engine);
FrobeniusTable frobenius_reconstruct(int n);

}  // namespace scoin::coinv
