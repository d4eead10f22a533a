#include "scoin/doperators/doperators.hpp"

#include <map>
#include <stdexcept>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/core/errors.hpp"
#include "scoin/symfunc/symfn.hpp"

namespace scoin::dop {

using exact::Exponent;
using exact::Rational;
using exact::RowEchelon;
using exact::SparseVec;

namespace {

// 0-based index of the block containing column j (1-based).
int block_of(const Partition& mu, int j) {
  for (int k = 0; k < mu.length(); ++k)
    if (j <= mu.block_end(k)) return k;
  throw std::out_of_range("column outside the partition");
}

std::vector<int> range_vars(int from, int to) {  // 0-based, half-open
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// Keeps x_1..x_n and sends y_i to x_{J_i}, landing in n variables.
std::vector<MPoly> y_to_x(int n, const Subset& J) {
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(MPoly::variable(n, i));
  for (int j : J.elems()) images.push_back(MPoly::variable(n, j - 1));
  return images;
}

PolyMatrix lift(const PolyMatrix& m, int nvars) {
  PolyMatrix out(m.rows(), m.cols(), nvars);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).with_nvars(nvars);
  return out;
}

std::int64_t parabolic_order(const Partition& mu) {
  std::int64_t o = 1;
  for (int p : mu.parts()) o = comb::checked_mul(o, comb::factorial(p));
  return o;
}

std::vector<int> rows_of(const PolyMatrix& m) { return range_vars(0, m.rows()); }

SparseVec poly_coords(const MPoly& p, std::map<Exponent, int>& index) {
  std::map<int, Rational> acc;
  for (const auto& [e, c] : p.terms()) acc[index.try_emplace(e, static_cast<int>(index.size())).first->second] += c;
  return exact::make_sparse(acc);
}

}  // namespace

int y_var(int n, int i) { return n + i - 1; }

PolyMatrix power_matrix(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("power_matrix: need 0 <= r <= n");
  PolyMatrix P(r, n, n + r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n; ++j) P.at(i - 1, j - 1) = MPoly::variable(n + r, y_var(n, i)).pow(n - j + 1);
  return P;
}

PolyMatrix factor_matrix(const Partition& mu, int r) {
  const int n = mu.size();
  if (r < 0 || r > n) throw std::invalid_argument("factor_matrix: need 0 <= r <= n");
  const int nv = n + r;
  PolyMatrix F(r, n, nv);
  for (int i = 1; i <= r; ++i) {
    const MPoly y = MPoly::variable(nv, y_var(n, i));
    for (int j = 1; j <= n; ++j) {
      const int end = mu.block_end(block_of(mu, j));
      MPoly e = y.pow(end - j + 1);
      for (int m = end + 1; m <= n; ++m) e = e * (y - MPoly::variable(nv, m - 1));
      F.at(i - 1, j - 1) = e;
    }
  }
  return F;
}

PolyMatrix reduction_matrix(const Partition& mu) {
  const int n = mu.size();
  PolyMatrix C = PolyMatrix::identity(n, n);
  for (int j = 1; j <= n; ++j) {
    const int end = mu.block_end(block_of(mu, j));
    const auto terminal = range_vars(end, n);
    for (int l = 1; l <= n - end; ++l) {
      MPoly e = exact::elementary(n, terminal, l);
      C.at(j + l - 1, j - 1) = (l % 2 ? -e : e);
    }
  }
  if (!(factor_matrix(mu, n) == power_matrix(n, n) * lift(C, 2 * n)))
    throw IntegrityError("F != P C(mu) for mu = " + mu.to_string());
  return C;
}

PolyMatrix column_operation_procedure(const Partition& mu, int r) {
  const int n = mu.size();
  PolyMatrix M = power_matrix(n, r);
  // Left to right: when column j is processed, the columns j + l it draws on are still untouched.
  for (int j = 1; j <= n; ++j) {
    const int end = mu.block_end(block_of(mu, j));
    const auto terminal = range_vars(end, n);
    for (int l = 1; l <= n - end; ++l) {
      MPoly e = exact::elementary(n + r, terminal, l);
      if (l % 2) e = -e;
      for (int i = 0; i < r; ++i) M.at(i, j - 1) += e * M.at(i, j + l - 1);
    }
  }
  return M;
}

PolyMatrix echelon_matrix(const TranslationSequence& T) {
  const int n = T.mu.size();
  const Subset all = T.all();
  PolyMatrix E(n - all.size(), n, n);
  int row = 0;
  for (int c = 1; c <= n; ++c)
    if (!all.contains(c)) E.at(row++, c - 1) = MPoly::constant(n, 1);
  return E;
}

PolyMatrix h_matrix(const TranslationSequence& T) {
  return echelon_matrix(T) * reduction_matrix(T.mu).inverse_lower_unitriangular();
}

FactorMatrixBundle build_bundle(const TranslationSequence& T) {
  FactorMatrixBundle b;
  b.mu = T.mu;
  b.T = T;
  b.r = T.total();
  b.P = power_matrix(T.mu.size(), b.r);
  b.F = factor_matrix(T.mu, b.r);
  b.C = reduction_matrix(T.mu);
  b.E = echelon_matrix(T);
  b.H = b.E * b.C.inverse_lower_unitriangular();
  return b;
}

MPoly ptj_determinant(const TranslationSequence& T, const Subset& J) {
  const int n = T.mu.size();
  const int r = T.total();
  if (J.size() != r || J.ambient() != n) throw std::invalid_argument("ptj_determinant: |J| must equal |T|");
  const PolyMatrix F = factor_matrix(T.mu, r).substitute(y_to_x(n, J));
  const Subset all = T.all();
  std::vector<int> tcols;
  for (int t : all.elems()) tcols.push_back(t - 1);
  MPoly d = F.minor(rows_of(F), tcols);
  // Generalized Laplace expansion along the E rows (r+1..n), whose minor on the complement of T is 1.
  int s = 0;
  int k = 0;
  for (int c = 1; c <= n; ++c)
    if (!all.contains(c)) s += (r + ++k) + c;
  return s % 2 ? -d : d;
}

MPoly ptj_determinant_full(const TranslationSequence& T, const Subset& J) {
  const int n = T.mu.size();
  const int r = T.total();
  if (J.size() != r || J.ambient() != n) throw std::invalid_argument("ptj_determinant_full: |J| must equal |T|");
  const PolyMatrix F = factor_matrix(T.mu, r).substitute(y_to_x(n, J));
  return lift(F, n).vstack(echelon_matrix(T)).det();
}

std::vector<Partition> weight_shapes(const TranslationSequence& T) {
  std::vector<Partition> out;
  for (int j = 0; j < T.mu.length(); ++j) {
    const auto& tj = T.sets[static_cast<std::size_t>(j)].elems();
    const int g = static_cast<int>(tj.size());
    const int end = T.mu.block_end(j);
    std::vector<int> nu;
    for (int i = 1; i <= g; ++i) nu.push_back(end - g + i - tj[static_cast<std::size_t>(i - 1)]);
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    out.emplace_back(nu);
  }
  return out;
}

MPoly weight(const TranslationSequence& T) {
  const int n = T.mu.size();
  MPoly w = MPoly::constant(n, 1);
  const auto shapes = weight_shapes(T);
  for (int j = 0; j < T.mu.length(); ++j) {
    const int g = T.sets[static_cast<std::size_t>(j)].size();
    const int end = T.mu.block_end(j);
    if (g == 0) continue;
    w = w * sym::schur_poly(shapes[static_cast<std::size_t>(j)], n, range_vars(end - g, end));
  }
  return w;
}

TranslationSequence sequence_from_shapes(const SignedPartition& sp, const std::vector<Partition>& nus) {
  const int n = sp.n();
  if (static_cast<int>(nus.size()) != sp.mu.length()) throw std::invalid_argument("sequence_from_shapes: one shape per block");
  std::vector<Subset> sets;
  for (int j = 0; j < sp.mu.length(); ++j) {
    const int g = sp.gamma[static_cast<std::size_t>(j)];
    const int end = sp.mu.block_end(j);
    const int start = sp.mu.block_start(j);
    const Partition& nu = nus[static_cast<std::size_t>(j)];
    if (nu.length() > g) throw std::invalid_argument("sequence_from_shapes: shape too long");
    std::vector<int> t;
    for (int i = 1; i <= g; ++i) {
      const int v = end - g + i - nu.part(i - 1);
      if (v < start) throw std::invalid_argument("sequence_from_shapes: shape too wide for its block");
      t.push_back(v);
    }
    sets.emplace_back(n, t);
  }
  return TranslationSequence(sp.mu, sets);
}

SuperElement apply_D(const TranslationSequence& T, const SuperElement& f) {
  const int n = T.mu.size();
  const int r = T.total();
  const PolyMatrix H = h_matrix(T);
  const auto hrows = rows_of(H);
  SuperElement out(n);
  for (const auto& I : comb::subsets_of_size(n, n - r)) {
    std::vector<int> cols;
    for (int i : I.elems()) cols.push_back(i - 1);
    const MPoly minor = n - r == 0 ? MPoly::constant(n, 1) : H.minor(hrows, cols);
    if (minor.is_zero()) continue;
    std::vector<int> ks;
    const Subset K = I.complement();
    for (int k : K.elems()) ks.push_back(n - k + 1);
    std::sort(ks.begin(), ks.end());
    SuperElement term = super::odot(SuperElement::from_poly(n, minor), super::euler_chain(ks, f));
    if (I.sum() % 2) term = -term;
    out += term;
  }
  return out;
}

MPoly l_polynomial(int nvars, const std::vector<int>& vars, int k, const comb::LPair& pair) {
  MPoly p = MPoly::constant(nvars, 1);
  for (int part : pair.lambda.parts()) p = p * exact::elementary(nvars, vars, part);
  const std::vector<int> last(vars.end() - k, vars.end());
  if (!pair.nu.empty()) p = p * sym::schur_poly(pair.nu, nvars, last);
  return p;
}

std::vector<MPoly> enumerate_L(int m, int k, int t) {
  std::vector<MPoly> out;
  const auto vars = range_vars(0, m);
  for (const auto& pr : comb::enumerate_L_pairs(m, k, t)) out.push_back(l_polynomial(m, vars, k, pr));
  return out;
}

std::vector<MPoly> build_E_set(const SignedPartition& sp) {
  const int n = sp.n();
  const auto st = comb::staircase(comb::j_of_signed(sp));
  std::vector<MPoly> acc{MPoly::constant(n, 1)};
  int t = 0;
  for (int j = 0; j < sp.mu.length(); ++j) {
    const int g = sp.gamma[static_cast<std::size_t>(j)];
    const int end = sp.mu.block_end(j);
    const auto vars = range_vars(sp.mu.block_start(j) - 1, end);
    std::vector<MPoly> block;
    for (const auto& pr : comb::enumerate_L_pairs(sp.mu.part(j), g, t)) block.push_back(l_polynomial(n, vars, g, pr));
    std::vector<MPoly> next;
    next.reserve(acc.size() * block.size());
    for (const auto& a : acc)
      for (const auto& b : block) next.push_back(a * b);
    acc = std::move(next);
    t = st[static_cast<std::size_t>(end - 1)];
  }
  return acc;
}

Verdict verify_monomial_bound(int m, int k, int t) {
  Verdict v;
  const auto bound = comb::elevated_staircase(m, k, t);
  const auto pairs = comb::enumerate_L_pairs(m, k, t);
  const std::string tag = "L(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
  if (static_cast<std::int64_t>(pairs.size()) != comb::count_L(m, k, t))
    v.fail(tag + ": enumerated " + std::to_string(pairs.size()) + " but count_L = " + std::to_string(comb::count_L(m, k, t)));

  // Every factor e_l and s_nu has positive coefficients, so no cancellation occurs in a product and
  // the largest exponent of x_i in it is the sum of the factors' largest exponents of x_i.
  const auto vars = range_vars(0, m);
  const std::vector<int> last(vars.end() - k, vars.end());
  auto profile = [&](const MPoly& p) {
    std::vector<int> top(static_cast<std::size_t>(m), 0);
    for (const auto& [e, c] : p.terms()) {
      if (c.sign() <= 0) throw IntegrityError(tag + ": factor " + p.to_string() + " is not monomial-positive");
      for (int i = 0; i < m; ++i) top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i)], e[i]);
    }
    return top;
  };
  std::map<int, std::vector<int>> e_top;
  for (int l = 1; l <= m; ++l) e_top[l] = profile(exact::elementary(m, vars, l));
  std::map<Partition, std::vector<int>> s_top;
  for (const auto& pr : pairs) {
    auto it = s_top.find(pr.nu);
    if (it == s_top.end())
      it = s_top.emplace(pr.nu, pr.nu.empty() ? std::vector<int>(static_cast<std::size_t>(m), 0)
                                              : profile(sym::schur_poly(pr.nu, m, last))).first;
    std::vector<int> top = it->second;
    for (int part : pr.lambda.parts())
      for (int i = 0; i < m; ++i) top[static_cast<std::size_t>(i)] += e_top[part][static_cast<std::size_t>(i)];
    for (int i = 0; i < m; ++i)
      if (top[static_cast<std::size_t>(i)] > bound[static_cast<std::size_t>(i)]) {
        v.fail(tag + ": e_" + pr.lambda.to_string() + " s_" + pr.nu.to_string() + " has x" + std::to_string(i + 1) + "^" +
               std::to_string(top[static_cast<std::size_t>(i)]) + " above the bound");
        break;
      }
  }
  return v;
}

Verdict verify_E_independence(const SignedPartition& sp) {
  Verdict v;
  const int n = sp.n();
  const Subset J = comb::j_of_signed(sp);
  const auto st = comb::staircase(J);
  const auto E = build_E_set(sp);
  const std::int64_t expect = comb::count_signed_artin_product(sp);
  if (static_cast<std::int64_t>(E.size()) != expect)
    v.fail(sp.to_string() + ": |E| = " + std::to_string(E.size()) + " but #A_n(mu,gamma) = " + std::to_string(expect));
  for (const auto& p : E) {
    for (const auto& [e, c] : p.terms()) {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok = ok && e[i] < st[static_cast<std::size_t>(i)];
      if (!ok) {
        v.fail(sp.to_string() + ": monomial " + MPoly::monomial(n, e).to_string() + " leaves A_n(J)");
        break;
      }
    }
  }
  if (!coinv::steinberg_independence(E, J)) v.fail(sp.to_string() + ": E is dependent modulo (I_n : f_J)");
  v.note(sp.to_string() + " |E|=" + std::to_string(E.size()));
  return v;
}

Verdict verify_leading(const TranslationSequence& T) {
  Verdict v;
  const int n = T.mu.size();
  const std::string tag = "mu=" + T.mu.to_string() + " T=" + T.to_string();
  if (T.sets.front().contains(1)) throw std::invalid_argument("verify_leading: requires 1 not in T_1");
  const SuperElement delta = super::vandermonde(n);
  const SuperElement D = apply_D(T, delta);
  if (D.is_zero()) {
    v.fail(tag + ": D(delta_n) = 0");
    return v;
  }
  for (const auto& g : super::coinvariant_generators(n))
    if (!super::odot(g, D).is_zero()) v.fail(tag + ": generator " + g.to_string() + " does not annihilate D(delta_n)");
  if (!(super::antisymmetrize(T.mu, D) == D * Rational(parabolic_order(T.mu))))
    v.fail(tag + ": eps_mu D(delta_n) != |S_mu| D(delta_n)");

  const Subset J0 = comb::j_of_signed(T.signed_partition());
  const int r = T.total();
  for (const auto& [m, c] : D.terms())
    if (m.fermionic_degree() != r) {
      v.fail(tag + ": term of fermionic degree " + std::to_string(m.fermionic_degree()));
      break;
    }
  for (const auto& J : comb::subsets_of_size(n, r))
    if (!comb::gale_leq(J, J0) && !D.theta_coefficient(J.mask()).is_zero())
      v.fail(tag + ": theta_" + J.to_string() + " survives although it is not Gale-below " + J0.to_string());
  const MPoly lead = D.theta_coefficient(J0.mask());
  const MPoly target = (weight(T) * super::f_J_poly(J0)).apply_as_operator(delta.to_poly());
  if (target.is_zero()) v.fail(tag + ": (weight f_J) (.) delta_n vanishes");
  if (!(lead == target) && !(lead == -target)) v.fail(tag + ": leading coefficient differs from +-(weight f_J) (.) delta_n");
  return v;
}

Verdict verify_lower_bound(const SignedPartition& sp) {
  Verdict v;
  const int n = sp.n();
  const Subset J0 = comb::j_of_signed(sp);
  const auto st = comb::staircase(J0);
  const SuperElement delta = super::vandermonde(n);

  // Per block, the (lambda, nu) pairs; an element of E is one choice per block.
  std::vector<std::vector<comb::LPair>> blocks;
  int t = 0;
  for (int j = 0; j < sp.mu.length(); ++j) {
    blocks.push_back(comb::enumerate_L_pairs(sp.mu.part(j), sp.gamma[static_cast<std::size_t>(j)], t));
    t = st[static_cast<std::size_t>(sp.mu.block_end(j) - 1)];
  }
  std::map<std::vector<Partition>, SuperElement> d_cache;
  RowEchelon span;
  std::map<Exponent, int> index;
  std::int64_t count = 0;
  std::vector<std::size_t> choice(blocks.size(), 0);
  for (;;) {
    std::vector<Partition> nus;
    MPoly h = MPoly::constant(n, 1);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[j].empty()) return v;  // nothing to realize
      const auto& pr = blocks[j][choice[j]];
      nus.push_back(pr.nu);
      const auto vars = range_vars(sp.mu.block_start(static_cast<int>(j)) - 1, sp.mu.block_end(static_cast<int>(j)));
      for (int part : pr.lambda.parts()) h = h * exact::elementary(n, vars, part);
    }
    auto it = d_cache.find(nus);
    if (it == d_cache.end()) it = d_cache.emplace(nus, apply_D(sequence_from_shapes(sp, nus), delta)).first;
    const MPoly lead = super::odot(SuperElement::from_poly(n, h), it->second).theta_coefficient(J0.mask());
    span.insert(poly_coords(lead, index));
    ++count;
    std::size_t j = 0;
    while (j < choice.size() && ++choice[j] == blocks[j].size()) choice[j++] = 0;
    if (j == choice.size()) break;
  }
  const std::int64_t expect = comb::count_signed_artin_product(sp);
  if (span.rank() < expect)
    v.fail(sp.to_string() + ": leading coefficients span " + std::to_string(span.rank()) + " < #A_n(mu,gamma) = " +
           std::to_string(expect));
  v.note(sp.to_string() + " rank=" + std::to_string(span.rank()) + " elements=" + std::to_string(count));
  return v;
}

}  // namespace scoin::dop
