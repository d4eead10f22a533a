#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "scoin/combinatorics/objects.hpp"
#include "scoin/combinatorics/qzpoly.hpp"

namespace scoin::comb {

/// Largest n accepted by the factorial-size enumerators. Mutable so the CLI can raise it.
struct EnumerationCaps {
  int max_n = 8;
};
EnumerationCaps& enumeration_caps();
/// Throws ResourceError when n exceeds the configured cap.
void check_cap(int n, std::string_view what);

using ExponentVec = std::vector<int>;

/// Monomials x^a with a_i < st(J)_i, lexicographic in a. Empty when 1 is in J.
std::vector<ExponentVec> enumerate_artin(const Subset& J);
/// The full Artin set for n: a_i < i.
std::vector<ExponentVec> enumerate_artin(int n);
/// Staircase-bounded monomials with strict increase on the first mu_j - gamma_j
/// positions of each block and weak increase on the last gamma_j.
std::vector<ExponentVec> enumerate_signed_artin(const SignedPartition& sp);
/// Closed-form binomial product for |enumerate_signed_artin(sp)|.
std::int64_t count_signed_artin_product(const SignedPartition& sp);
/// The same count as prod_j count_I(mu_j, gamma_j, t_{j-1}) with t read off the staircase.
std::int64_t count_signed_artin_via_I(const SignedPartition& sp);

/// Requires m >= 1 and 0 <= k <= m.
std::int64_t count_L(int m, int k, int t);
std::int64_t count_I(int m, int k, int t);
/// Pairs (lambda, nu): nu inside a k x (m-k) box, lambda with parts <= m and at most
/// t parts, or at most t-1 parts when nu_1 = m-k.
struct LPair {
  Partition lambda;
  Partition nu;
};
std::vector<LPair> enumerate_L_pairs(int m, int k, int t);
/// Sequences c with c_1 < ... < c_{m-k}, c_{m-k+1} <= ... <= c_m, bounded by the elevated staircase.
std::vector<ExponentVec> enumerate_I(int m, int k, int t);
/// (t, t+1, ..., t+m-k-1, then k copies of t+m-k-1).
ExponentVec elevated_staircase(int m, int k, int t);

QZPoly q_stirling(int n, int k);
/// sum_k z^{n-k} [k]!_q Stir_q(n,k).
QZPoly fields1_formula(int n);

/// Optional restriction for OSP enumeration.
struct OspConstraint {
  std::optional<int> k;                     // number of blocks
  std::optional<std::vector<int>> sizes;    // block sizes (a composition)
  std::optional<Partition> batches;         // each mu-interval appears left to right in increasing order
};
/// Ordered set partitions of [n]; deterministic order. Throws ResourceError past the cap.
std::vector<OrderedSetPartition> enumerate_osp(int n, const OspConstraint& c = {});
/// True when, for every batch interval of mu, its elements occur in increasing
/// order from left to right (block indices weakly increase along the batch).
bool batch_increasing(const OrderedSetPartition& sigma, const Partition& mu);

enum class OmpStat { inv, maj, dinv, minimaj };
std::string_view to_string(OmpStat s);
/// Throws std::invalid_argument on unknown names.
OmpStat parse_omp_stat(std::string_view name);

/// Ordered multiset partitions with k blocks, total size n, letters in [1..maxletter].
std::vector<OrderedMultisetPartition> enumerate_omp(int n, int k, int maxletter);
int omp_statistic(const OrderedMultisetPartition& m, OmpStat stat);

std::vector<StandardTableau> enumerate_syt(const Partition& shape);
std::vector<StandardTableau> enumerate_syt(int n);

/// Number of semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

/// Permutations are 0-based image vectors: w[i] = w(i).
using Permutation = std::vector<int>;
std::vector<Permutation> all_permutations(int n);
/// Elements of the parabolic subgroup permuting each mu-interval.
std::vector<Permutation> parabolic_subgroup(const Partition& mu);
int permutation_sign(const Permutation& w);
/// (u o w)(i) = u(w(i)).
Permutation compose(const Permutation& u, const Permutation& w);

}  // namespace scoin::comb
