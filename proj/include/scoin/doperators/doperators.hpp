#pragma once

#include <vector>

#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/combinatorics/objects.hpp"
#include "scoin/core/verdict.hpp"
#include "scoin/exactalg/poly_matrix.hpp"
#include "scoin/superspace/element.hpp"

namespace scoin::dop {

using comb::Partition;
using comb::SignedPartition;
using comb::Subset;
using comb::TranslationSequence;
using exact::MPoly;
using exact::PolyMatrix;
using super::SuperElement;

// Matrices mixing x and y live in n + r variables: x_1..x_n are indices 0..n-1 and
// y_1..y_r follow. Matrices over x alone use n variables.

/// Variable index of y_i (1-based i) in the n + r variable ring.
int y_var(int n, int i);

/// r x n, entry (i, j) = y_i^{n-j+1}.
PolyMatrix power_matrix(int n, int r);
/// r x n, entry (i, j) = y_i^{end_k - j + 1} prod_{m > end_k} (y_i - x_m) for column j in block k.
PolyMatrix factor_matrix(const Partition& mu, int r);
/// Lower unitriangular C(mu) with C_{j+l, j} = (-1)^l e_l(terminal variables of the block of j).
/// Checks F_n = P_n C(mu) and throws IntegrityError otherwise.
PolyMatrix reduction_matrix(const Partition& mu);
/// F obtained from P by the left-to-right column operations (add (-1)^l e_l times column j+l to column j).
PolyMatrix column_operation_procedure(const Partition& mu, int r);
/// (n - |T|) x n 0/1 matrix with one 1 per row at the columns outside T, increasing.
PolyMatrix echelon_matrix(const TranslationSequence& T);
/// H = E C(mu)^{-1}.
PolyMatrix h_matrix(const TranslationSequence& T);

struct FactorMatrixBundle {
  Partition mu;
  TranslationSequence T;
  int r = 0;
  PolyMatrix P, F, C, E, H;
};
FactorMatrixBundle build_bundle(const TranslationSequence& T);

/// det [F_r(x_J); E] with y_i -> x_{j_i} in increasing order; |J| must equal |T|.
MPoly ptj_determinant(const TranslationSequence& T, const Subset& J);
/// Same determinant by expanding the whole n x n matrix (reference for small n).
MPoly ptj_determinant_full(const TranslationSequence& T, const Subset& J);

/// prod_j s_{nu(T_j)}(last gamma_j variables of block j).
MPoly weight(const TranslationSequence& T);
/// nu(T_j) for each block.
std::vector<Partition> weight_shapes(const TranslationSequence& T);
/// The translation sequence whose weight shapes are nus (inverse of weight_shapes); throws if none.
TranslationSequence sequence_from_shapes(const SignedPartition& sp, const std::vector<Partition>& nus);

/// sum_{|I| = n-r} (-1)^{sum I} Delta_I(H) (.) d_{([n]-I)^*}(f).
SuperElement apply_D(const TranslationSequence& T, const SuperElement& f);

/// L(m,k,t) as polynomials in x_1..x_m, in the order of comb::enumerate_L_pairs.
std::vector<MPoly> enumerate_L(int m, int k, int t);
/// e_lambda(vars) s_nu(last k of vars) in a ring with nvars variables.
MPoly l_polynomial(int nvars, const std::vector<int>& vars, int k, const comb::LPair& pair);
/// E(mu, gamma): products over blocks of L(X_j, gamma_j, t_{j-1}).
std::vector<MPoly> build_E_set(const SignedPartition& sp);

/// Every monomial of L(m,k,t) is bounded by the elevated staircase, and |L| = count_L.
Verdict verify_monomial_bound(int m, int k, int t);
/// |E| = #A_n(mu,gamma), monomials of E lie in A_n(J(mu,gamma)), and E is independent modulo
/// (I_n : f_{J(mu,gamma)}).
Verdict verify_E_independence(const SignedPartition& sp);

/// The leading-coefficient checks for one translation sequence with 1 not in T_1: D(delta_n)
/// is nonzero, killed by every generator, eps_mu-fixed up to |S_mu|, Gale-vanishing, and its
/// theta_{J(mu,gamma)} coefficient is +-(weight f_J) (.) delta_n.
Verdict verify_leading(const TranslationSequence& T);
/// rank of the theta_{J(mu,gamma)} coefficients of h (.) D^T(delta_n) over E(mu,gamma) is at
/// least #A_n(mu,gamma), where each element of E is split as h * weight(T).
Verdict verify_lower_bound(const SignedPartition& sp);

}  // namespace scoin::dop
