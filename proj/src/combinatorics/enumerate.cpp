#include "scoin/combinatorics/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "scoin/core/errors.hpp"

namespace scoin::comb {

EnumerationCaps& enumeration_caps() {
  static EnumerationCaps caps;
  return caps;
}

void check_cap(int n, std::string_view what) {
  if (n > enumeration_caps().max_n) {
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(enumeration_caps().max_n));
  }
}

namespace {

// Cartesian product of per-position choice lists, first position most significant.
std::vector<ExponentVec> product(const std::vector<std::vector<ExponentVec>>& parts) {
  std::vector<ExponentVec> out{{}};
  for (const auto& choices : parts) {
    std::vector<ExponentVec> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (const auto& c : choices) {
        ExponentVec v = prefix;
        v.insert(v.end(), c.begin(), c.end());
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Sequences c of the given length with c_i < bound_i, c strictly (or weakly) increasing,
// c_0 >= lo_first.
void chains(const std::vector<int>& bound, bool strict, std::size_t pos, int lo, ExponentVec& cur,
            std::vector<ExponentVec>& out) {
  if (pos == bound.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v < bound[pos]; ++v) {
    cur.push_back(v);
    chains(bound, strict, pos + 1, strict ? v + 1 : v, cur, out);
    cur.pop_back();
  }
}

std::vector<ExponentVec> chains(const std::vector<int>& bound, bool strict) {
  std::vector<ExponentVec> out;
  ExponentVec cur;
  chains(bound, strict, 0, 0, cur, out);
  return out;
}

}  // namespace

std::vector<ExponentVec> enumerate_artin(const Subset& J) {
  auto st = staircase(J);
  std::vector<std::vector<ExponentVec>> parts;
  for (int b : st) {
    std::vector<ExponentVec> c;
    for (int a = 0; a < b; ++a) c.push_back({a});
    parts.push_back(std::move(c));
  }
  return product(parts);
}

std::vector<ExponentVec> enumerate_artin(int n) { return enumerate_artin(Subset(n, {})); }

std::vector<ExponentVec> enumerate_signed_artin(const SignedPartition& sp) {
  auto st = staircase(j_of_signed(sp));
  std::vector<std::vector<ExponentVec>> parts;
  for (int j = 0; j < sp.mu.length(); ++j) {
    int start = sp.mu.block_start(j) - 1;
    int strict_len = sp.mu.part(j) - sp.gamma[static_cast<std::size_t>(j)];
    std::vector<int> b1(st.begin() + start, st.begin() + start + strict_len);
    std::vector<int> b2(st.begin() + start + strict_len, st.begin() + start + sp.mu.part(j));
    auto head = chains(b1, true);
    auto tail = chains(b2, false);
    parts.push_back(product({head, tail}));
  }
  return product(parts);
}

std::int64_t count_signed_artin_product(const SignedPartition& sp) {
  std::int64_t total = 1;
  std::int64_t prefix = 0;  // (mu_1 - gamma_1) + ... over earlier blocks
  for (int j = 0; j < sp.mu.length(); ++j) {
    std::int64_t m = sp.mu.part(j), g = sp.gamma[static_cast<std::size_t>(j)];
    total = checked_mul(total, binomial(prefix + m - g, m - g));
    total = checked_mul(total, binomial(prefix + m - 1, g));
    prefix += m - g;
  }
  return total;
}

std::int64_t count_signed_artin_via_I(const SignedPartition& sp) {
  auto st = staircase(j_of_signed(sp));
  std::int64_t total = 1;
  int t = 0;
  for (int j = 0; j < sp.mu.length(); ++j) {
    total = checked_mul(total, count_I(sp.mu.part(j), sp.gamma[static_cast<std::size_t>(j)], t));
    t = st[static_cast<std::size_t>(sp.mu.block_end(j) - 1)];
  }
  return total;
}

namespace {

void check_mkt(int m, int k, int t) {
  if (m < 1 || k < 0 || k > m || t < 0) {
    throw std::invalid_argument("count_L/count_I: need m >= 1, 0 <= k <= m, t >= 0");
  }
}

}  // namespace

std::int64_t count_L(int m, int k, int t) {
  check_mkt(m, k, t);
  return checked_add(checked_mul(binomial(m + t - 1, m), binomial(m, k)),
                     checked_mul(binomial(m + t - 1, m - 1), binomial(m - 1, k)));
}

std::int64_t count_I(int m, int k, int t) {
  check_mkt(m, k, t);
  return checked_mul(binomial(m + t - k, t), binomial(m + t - 1, k));
}

std::vector<LPair> enumerate_L_pairs(int m, int k, int t) {
  check_mkt(m, k, t);
  std::vector<LPair> out;
  for (const auto& nu : partitions_in_box(k, m - k)) {
    int chi = nu.part(0) == m - k ? t - 1 : t;
    if (chi < 0) continue;
    for (const auto& lambda : partitions_in_box(chi, m)) out.push_back({lambda, nu});
  }
  return out;
}

ExponentVec elevated_staircase(int m, int k, int t) {
  ExponentVec b;
  for (int i = 0; i < m - k; ++i) b.push_back(t + i);
  for (int i = 0; i < k; ++i) b.push_back(t + m - k - 1);
  return b;
}

std::vector<ExponentVec> enumerate_I(int m, int k, int t) {
  check_mkt(m, k, t);
  auto b = elevated_staircase(m, k, t);
  std::vector<int> b1, b2;
  for (int i = 0; i < m; ++i) (i < m - k ? b1 : b2).push_back(b[static_cast<std::size_t>(i)] + 1);
  return product({chains(b1, true), chains(b2, false)});
}

QZPoly q_stirling(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_stirling: negative argument");
  // table[k] holds Stir_q(m, k) for the current m
  std::vector<QZPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QZPoly(1);
  for (int m = 1; m <= n; ++m) {
    std::vector<QZPoly> next(row.size());
    for (int j = 1; j <= k; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + q_integer(j) * row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

QZPoly fields1_formula(int n) {
  if (n < 1) throw std::invalid_argument("fields1_formula: n must be positive");
  QZPoly total;
  for (int k = 1; k <= n; ++k) total += QZPoly::z_power(n - k) * q_factorial(k) * q_stirling(n, k);
  return total;
}

bool batch_increasing(const OrderedSetPartition& sigma, const Partition& mu) {
  std::vector<int> block_of(static_cast<std::size_t>(sigma.n()) + 1, 0);
  for (std::size_t b = 0; b < sigma.blocks.size(); ++b) {
    for (int x : sigma.blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
  for (int j = 0; j < mu.length(); ++j) {
    for (int i = mu.block_start(j); i < mu.block_end(j); ++i) {
      if (block_of[static_cast<std::size_t>(i)] > block_of[static_cast<std::size_t>(i + 1)]) return false;
    }
  }
  return true;
}

std::vector<OrderedSetPartition> enumerate_osp(int n, const OspConstraint& c) {
  check_cap(n, "enumerate_osp");
  if (c.batches && c.batches->size() != n) throw std::invalid_argument("enumerate_osp: batch partition must have size n");
  std::vector<OrderedSetPartition> out;
  // set partitions via restricted growth strings, then every ordering of the blocks
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int nblocks) {
    if (pos == n) {
      if (c.k && *c.k != nblocks) return;
      Blocks blocks(static_cast<std::size_t>(nblocks));
      for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      std::vector<int> order(static_cast<std::size_t>(nblocks));
      std::iota(order.begin(), order.end(), 0);
      do {
        Blocks b;
        for (int o : order) b.push_back(blocks[static_cast<std::size_t>(o)]);
        if (c.sizes) {
          if (c.sizes->size() != b.size()) continue;
          bool ok = true;
          for (std::size_t i = 0; i < b.size(); ++i) ok = ok && static_cast<int>(b[i].size()) == (*c.sizes)[i];
          if (!ok) continue;
        }
        OrderedSetPartition sigma(std::move(b));
        if (c.batches && !batch_increasing(sigma, *c.batches)) continue;
        out.push_back(std::move(sigma));
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      if (c.k && b >= *c.k) break;
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(nblocks, b + 1));
    }
  };
  if (n == 0) {
    if (!c.k || *c.k == 0) out.emplace_back();
    return out;
  }
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](const OrderedSetPartition& a, const OrderedSetPartition& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return a.blocks < b.blocks;
  });
  return out;
}

std::string_view to_string(OmpStat s) {
  switch (s) {
    case OmpStat::inv: return "inv";
    case OmpStat::maj: return "maj";
    case OmpStat::dinv: return "dinv";
    case OmpStat::minimaj: return "minimaj";
  }
  return "?";
}

OmpStat parse_omp_stat(std::string_view name) {
  for (OmpStat s : {OmpStat::inv, OmpStat::maj, OmpStat::dinv, OmpStat::minimaj}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown OMP statistic: " + std::string(name));
}

std::vector<OrderedMultisetPartition> enumerate_omp(int n, int k, int maxletter) {
  check_cap(n, "enumerate_omp");
  if (maxletter < 1 || maxletter > 16) throw std::invalid_argument("enumerate_omp: maxletter out of range");
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t m = 1; m < (1u << maxletter); ++m) {
    std::vector<int> s;
    for (int i = 0; i < maxletter; ++i) {
      if (m & (1u << i)) s.push_back(i + 1);
    }
    if (static_cast<int>(s.size()) <= n) subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<OrderedMultisetPartition> out;
  Blocks cur;
  std::function<void(int, int)> rec = [&](int left, int rest) {
    if (left == 0) {
      if (rest == 0) out.emplace_back(cur);
      return;
    }
    for (const auto& s : subsets) {
      int sz = static_cast<int>(s.size());
      if (sz > rest - (left - 1)) continue;
      cur.push_back(s);
      rec(left - 1, rest - sz);
      cur.pop_back();
    }
  };
  rec(k, n);
  return out;
}

namespace {

int omp_inv(const Blocks& b) {
  int c = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      int lo = b[j].front();
      for (int a : b[i]) c += a > lo ? 1 : 0;
    }
  }
  return c;
}

int omp_maj(const Blocks& b) {
  std::vector<int> w, ends;
  for (const auto& blk : b) {
    w.insert(w.end(), blk.rbegin(), blk.rend());
    ends.push_back(static_cast<int>(w.size()));
  }
  int total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      int pos = static_cast<int>(i) + 1;
      for (int e : ends) total += e <= pos ? 1 : 0;
    }
  }
  return total;
}

int omp_minimaj(const Blocks& b) {
  // best[last letter] = smallest word maj of a prefix arrangement ending in that letter
  std::map<int, int> best{{0, 0}};
  int pos = 0;  // letters placed so far
  bool first = true;
  for (const auto& blk : b) {
    std::map<int, int> next;
    std::vector<int> perm = blk;
    do {
      int internal = 0;
      for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] > perm[i + 1]) internal += pos + static_cast<int>(i) + 1;
      }
      for (const auto& [last, val] : best) {
        int v = val + internal + (!first && last > perm.front() ? pos : 0);
        auto [it, ins] = next.try_emplace(perm.back(), v);
        if (!ins) it->second = std::min(it->second, v);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best = std::move(next);
    pos += static_cast<int>(blk.size());
    first = false;
  }
  int m = std::numeric_limits<int>::max();
  for (const auto& [last, v] : best) m = std::min(m, v);
  return m;
}

int omp_dinv(const Blocks& b) {
  // columns are the blocks, entries increasing from the bottom row
  struct Cell {
    int col, row, val;
  };
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < b.size(); ++c) {
    for (std::size_t r = 0; r < b[c].size(); ++r) cells.push_back({static_cast<int>(c), static_cast<int>(r), b[c][r]});
  }
  int d = 0;
  for (const auto& x : cells) {
    for (const auto& y : cells) {
      if (x.col >= y.col) continue;
      if (x.row == y.row && x.val > y.val) ++d;
      if (y.row == x.row + 1 && x.val < y.val) ++d;
    }
  }
  return d;
}

}  // namespace

int omp_statistic(const OrderedMultisetPartition& m, OmpStat stat) {
  switch (stat) {
    case OmpStat::inv: return omp_inv(m.blocks);
    case OmpStat::maj: return omp_maj(m.blocks);
    case OmpStat::dinv: return omp_dinv(m.blocks);
    case OmpStat::minimaj: return omp_minimaj(m.blocks);
  }
  throw std::invalid_argument("omp_statistic: unknown statistic");
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  check_cap(shape.size(), "enumerate_syt");
  int n = shape.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int i = 0; i < shape.length(); ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      int len = static_cast<int>(row.size());
      if (len == shape.part(i)) continue;
      if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= len) continue;
      row.push_back(v);
      rec(v + 1);
      row.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<StandardTableau> enumerate_syt(int n) {
  std::vector<StandardTableau> out;
  for (const auto& p : partitions_of(n)) {
    auto s = enumerate_syt(p);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("kostka: sizes differ");
  // strip off horizontal strips for the largest letters first
  std::map<std::pair<std::vector<int>, int>, std::int64_t> memo;
  const auto& content = mu.parts();
  std::function<std::int64_t(const std::vector<int>&, int)> rec = [&](const std::vector<int>& sh,
                                                                     int letters) -> std::int64_t {
    if (letters == 0) {
      return std::all_of(sh.begin(), sh.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    auto key = std::pair(sh, letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int strip = content[static_cast<std::size_t>(letters - 1)];
    std::int64_t total = 0;
    std::vector<int> cur(sh.size());
    std::function<void(std::size_t, int)> gen = [&](std::size_t i, int rem) {
      if (i == sh.size()) {
        if (rem == 0) total = checked_add(total, rec(cur, letters - 1));
        return;
      }
      int lo = i + 1 < sh.size() ? sh[i + 1] : 0;
      for (int v = sh[i]; v >= lo && sh[i] - v <= rem; --v) {
        cur[i] = v;
        gen(i + 1, rem - (sh[i] - v));
      }
    };
    gen(0, strip);
    memo[key] = total;
    return total;
  };
  return rec(lambda.parts(), mu.length());
}

std::vector<Permutation> all_permutations(int n) {
  check_cap(n, "all_permutations");
  std::vector<Permutation> out;
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> parabolic_subgroup(const Partition& mu) {
  check_cap(mu.size(), "parabolic_subgroup");
  std::vector<Permutation> out;
  Permutation w(static_cast<std::size_t>(mu.size()));
  std::iota(w.begin(), w.end(), 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == mu.length()) {
      out.push_back(w);
      return;
    }
    auto b = w.begin() + (mu.block_start(j) - 1);
    auto e = w.begin() + mu.block_end(j);
    std::sort(b, e);
    do {
      rec(j + 1);
    } while (std::next_permutation(b, e));
  };
  rec(0);
  return out;
}

int permutation_sign(const Permutation& w) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inversions += w[i] > w[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("compose: permutations of different sizes");
  Permutation r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = u[static_cast<std::size_t>(w[i])];
  return r;
}

}  // namespace scoin::comb
