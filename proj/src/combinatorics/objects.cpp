#include "scoin/combinatorics/objects.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scoin::comb {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string blocks_string(const Blocks& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << " | ";
    os << join(b[i], ",");
  }
  os << ")";
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must weakly decrease");
    n_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    for (int j = 1; j <= parts_.front(); ++j) {
      int cnt = 0;
      for (int p : parts_) cnt += p >= j ? 1 : 0;
      c.push_back(cnt);
    }
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 0; i < o.length(); ++i) {
    if (o.part(i) > part(i)) return false;
  }
  return true;
}

bool Partition::dominates(const Partition& o) const {
  if (o.size() != size()) throw std::invalid_argument("Partition::dominates: sizes differ");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), o.length()); ++i) {
    a += part(i);
    b += o.part(i);
    if (a < b) return false;
  }
  return true;
}

int Partition::block_start(int j) const {
  int s = 1;
  for (int i = 0; i < j; ++i) s += part(i);
  return s;
}

int Partition::block_end(int j) const { return block_start(j) + part(j) - 1; }

std::string Partition::to_string() const { return "(" + join(parts_, ",") + ")"; }

namespace {

void gen_partitions(int rest, int maxpart, int maxlen, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int p = std::min(rest, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rest - p, p, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) return out;
  std::vector<int> cur;
  for (int s = 0; s <= rows * cols; ++s) gen_partitions(s, cols, rows, cur, out);
  return out;
}

Subset::Subset(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n < 0 || n > 31) throw std::invalid_argument("Subset: ambient size out of range");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n) throw std::invalid_argument("Subset: element out of range");
    if (i > 0 && elems_[i] <= elems_[i - 1]) throw std::invalid_argument("Subset: elements must strictly increase");
  }
}

Subset Subset::from_mask(int n, std::uint32_t mask) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) {
    if (mask & (1u << (i - 1))) e.push_back(i);
  }
  return Subset(n, std::move(e));
}

bool Subset::contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

std::uint32_t Subset::mask() const {
  std::uint32_t m = 0;
  for (int e : elems_) m |= 1u << (e - 1);
  return m;
}

Subset Subset::complement() const {
  std::vector<int> e;
  for (int i = 1; i <= n_; ++i) {
    if (!contains(i)) e.push_back(i);
  }
  return Subset(n_, std::move(e));
}

int Subset::sum() const { return std::accumulate(elems_.begin(), elems_.end(), 0); }

std::string Subset::to_string() const { return "{" + join(elems_, ",") + "}"; }

std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (int k = 0; k <= n; ++k) {
    auto s = subsets_of_size(n, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

bool gale_leq(const Subset& I, const Subset& J) {
  if (I.size() != J.size()) throw std::invalid_argument("gale_leq: subsets of different sizes");
  if (I.ambient() != J.ambient()) throw std::invalid_argument("gale_leq: different ambient sets");
  for (int r = 0; r < I.size(); ++r) {
    if (I.elems()[static_cast<std::size_t>(r)] > J.elems()[static_cast<std::size_t>(r)]) return false;
  }
  return true;
}

std::vector<int> staircase(const Subset& J) {
  std::vector<int> st;
  int n = J.ambient();
  st.reserve(static_cast<std::size_t>(n));
  int cur = J.contains(1) ? 0 : 1;
  for (int i = 1; i <= n; ++i) {
    if (i > 1 && !J.contains(i)) ++cur;
    st.push_back(cur);
  }
  return st;
}

SignedPartition::SignedPartition(Partition m, std::vector<int> g) : mu(std::move(m)), gamma(std::move(g)) {
  if (static_cast<int>(gamma.size()) != mu.length()) throw std::invalid_argument("SignedPartition: length mismatch");
  for (int j = 0; j < mu.length(); ++j) {
    int gj = gamma[static_cast<std::size_t>(j)];
    if (gj < 0 || gj > mu.part(j)) throw std::invalid_argument("SignedPartition: gamma out of range");
  }
}

std::string SignedPartition::to_string() const {
  return "(" + mu.to_string() + "," + "(" + join(gamma, ",") + "))";
}

std::vector<SignedPartition> signed_partitions_of(const Partition& mu) {
  std::vector<SignedPartition> out;
  std::vector<int> g(static_cast<std::size_t>(mu.length()), 0);
  while (true) {
    out.emplace_back(mu, g);
    int j = mu.length() - 1;
    while (j >= 0 && g[static_cast<std::size_t>(j)] == mu.part(j)) {
      g[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++g[static_cast<std::size_t>(j)];
  }
  return out;
}

Subset j_of_signed(const SignedPartition& sp) {
  std::vector<int> e;
  for (int j = 0; j < sp.mu.length(); ++j) {
    int end = sp.mu.block_end(j);
    for (int i = end - sp.gamma[static_cast<std::size_t>(j)] + 1; i <= end; ++i) e.push_back(i);
  }
  return Subset(sp.n(), std::move(e));
}

TranslationSequence::TranslationSequence(Partition m, std::vector<Subset> s) : mu(std::move(m)), sets(std::move(s)) {
  if (static_cast<int>(sets.size()) != mu.length()) throw std::invalid_argument("TranslationSequence: one set per part required");
  for (int j = 0; j < mu.length(); ++j) {
    const Subset& t = sets[static_cast<std::size_t>(j)];
    if (t.ambient() != mu.size()) throw std::invalid_argument("TranslationSequence: ambient size mismatch");
    for (int e : t.elems()) {
      if (e < mu.block_start(j) || e > mu.block_end(j)) {
        throw std::invalid_argument("TranslationSequence: element outside its block");
      }
    }
  }
}

std::vector<int> TranslationSequence::gamma() const {
  std::vector<int> g;
  for (const auto& s : sets) g.push_back(s.size());
  return g;
}

Subset TranslationSequence::all() const {
  std::vector<int> e;
  for (const auto& s : sets) e.insert(e.end(), s.elems().begin(), s.elems().end());
  return Subset(mu.size(), std::move(e));
}

int TranslationSequence::total() const {
  int t = 0;
  for (const auto& s : sets) t += s.size();
  return t;
}

std::string TranslationSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << ",";
    os << sets[i].to_string();
  }
  os << ")";
  return os.str();
}

std::vector<TranslationSequence> translation_sequences_of(const Partition& mu) {
  int n = mu.size();
  std::vector<std::vector<Subset>> per_block;
  for (int j = 0; j < mu.length(); ++j) {
    std::vector<Subset> choices;
    int lo = mu.block_start(j), len = mu.part(j);
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      choices.push_back(Subset::from_mask(n, m << (lo - 1)));
    }
    std::sort(choices.begin(), choices.end(), [](const Subset& a, const Subset& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.elems() < b.elems();
    });
    per_block.push_back(std::move(choices));
  }
  std::vector<TranslationSequence> out;
  std::vector<std::size_t> idx(per_block.size(), 0);
  while (true) {
    std::vector<Subset> sets;
    for (std::size_t j = 0; j < idx.size(); ++j) sets.push_back(per_block[j][idx[j]]);
    out.emplace_back(mu, std::move(sets));
    int j = static_cast<int>(idx.size()) - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == per_block[static_cast<std::size_t>(j)].size()) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
  }
  return out;
}

OrderedSetPartition::OrderedSetPartition(Blocks b) : blocks(std::move(b)) {
  std::set<int> seen;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
    if (!std::is_sorted(blk.begin(), blk.end())) throw std::invalid_argument("OrderedSetPartition: blocks must be sorted");
    for (int x : blk) {
      if (!seen.insert(x).second) throw std::invalid_argument("OrderedSetPartition: blocks overlap");
    }
  }
  int n = static_cast<int>(seen.size());
  if (n > 0 && (*seen.begin() != 1 || *seen.rbegin() != n)) {
    throw std::invalid_argument("OrderedSetPartition: blocks must cover [n]");
  }
}

int OrderedSetPartition::n() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string OrderedSetPartition::to_string() const { return blocks_string(blocks); }

OrderedMultisetPartition::OrderedMultisetPartition(Blocks b) : blocks(std::move(b)) {
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("OrderedMultisetPartition: empty block");
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      throw std::invalid_argument("OrderedMultisetPartition: repeated letter in a block");
    }
    if (blk.front() < 1) throw std::invalid_argument("OrderedMultisetPartition: letters must be positive");
  }
}

int OrderedMultisetPartition::n() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string OrderedMultisetPartition::to_string() const { return blocks_string(blocks); }

StandardTableau::StandardTableau(Partition sh, std::vector<std::vector<int>> r) : shape(std::move(sh)), rows(std::move(r)) {
  if (static_cast<int>(rows.size()) != shape.length()) throw std::invalid_argument("StandardTableau: row count mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(shape.size()) + 1, false);
  for (int i = 0; i < shape.length(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != shape.part(i)) throw std::invalid_argument("StandardTableau: row length mismatch");
    for (std::size_t j = 0; j < row.size(); ++j) {
      int v = row[j];
      if (v < 1 || v > shape.size() || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("StandardTableau: entries must be 1..n, each once");
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && row[j - 1] >= v) throw std::invalid_argument("StandardTableau: rows must increase");
      if (i > 0 && rows[static_cast<std::size_t>(i - 1)][j] >= v) {
        throw std::invalid_argument("StandardTableau: columns must increase");
      }
    }
  }
}

std::vector<int> StandardTableau::descents() const {
  std::vector<int> row_of(static_cast<std::size_t>(n()) + 2, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int v : rows[i]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<int> d;
  for (int i = 1; i < n(); ++i) {
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d.push_back(i);
  }
  return d;
}

int StandardTableau::maj() const {
  auto d = descents();
  return std::accumulate(d.begin(), d.end(), 0);
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << " / ";
    os << join(rows[i], " ");
  }
  return os.str();
}

}  // namespace scoin::comb
