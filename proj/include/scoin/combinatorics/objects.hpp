#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace scoin::comb {

/// Weakly decreasing list of positive parts. The empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  /// Young diagram containment.
  bool contains(const Partition& o) const;
  /// Dominance order this >= o; sizes must agree.
  bool dominates(const Partition& o) const;
  /// Starting index (1-based) of block j (0-based) viewed as consecutive intervals of [n].
  int block_start(int j) const;
  int block_end(int j) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Partitions of n in lexicographically decreasing order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
/// Partitions fitting inside a box with at most `rows` parts each at most `cols`,
/// ordered by size and then lexicographically decreasing.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Strictly increasing subset of [1..n].
class Subset {
 public:
  Subset() = default;
  /// Throws std::invalid_argument on repeated, unsorted or out-of-range elements.
  Subset(int n, std::vector<int> elems);
  static Subset from_mask(int n, std::uint32_t mask);

  int ambient() const { return n_; }
  const std::vector<int>& elems() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int i) const;
  std::uint32_t mask() const;
  Subset complement() const;
  int sum() const;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.elems_ <=> b.elems_;
  }

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// All k-subsets of [n] in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int k);
/// All subsets of [n], by size then lexicographically.
std::vector<Subset> all_subsets(int n);

/// Componentwise comparison of sorted elements; throws std::invalid_argument on size mismatch.
bool gale_leq(const Subset& I, const Subset& J);

/// The J-staircase: starts at 0 if 1 is in J and at 1 otherwise; each later entry
/// repeats the previous one for i in J and increments it otherwise.
std::vector<int> staircase(const Subset& J);

struct SignedPartition {
  Partition mu;
  std::vector<int> gamma;

  SignedPartition() = default;
  /// Throws std::invalid_argument unless 0 <= gamma_j <= mu_j.
  SignedPartition(Partition mu, std::vector<int> gamma);

  int n() const { return mu.size(); }
  std::string to_string() const;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// Every gamma with 0 <= gamma <= mu componentwise, in lexicographic order.
std::vector<SignedPartition> signed_partitions_of(const Partition& mu);

/// Union of the top gamma_j elements of each block interval of mu.
Subset j_of_signed(const SignedPartition& sp);

struct TranslationSequence {
  Partition mu;
  std::vector<Subset> sets;

  TranslationSequence() = default;
  /// Throws std::invalid_argument unless sets[j] lies in the j-th block interval.
  TranslationSequence(Partition mu, std::vector<Subset> sets);

  std::vector<int> gamma() const;
  SignedPartition signed_partition() const { return {mu, gamma()}; }
  /// Union of all sets as a subset of [n].
  Subset all() const;
  int total() const;
  std::string to_string() const;
  friend bool operator==(const TranslationSequence&, const TranslationSequence&) = default;
};

/// All translation sequences for mu, blocks enumerated lexicographically.
std::vector<TranslationSequence> translation_sequences_of(const Partition& mu);

using Blocks = std::vector<std::vector<int>>;

struct OrderedSetPartition {
  Blocks blocks;

  OrderedSetPartition() = default;
  /// Throws std::invalid_argument unless blocks are nonempty, sorted, disjoint and cover [n].
  explicit OrderedSetPartition(Blocks b);
  int n() const;
  int k() const { return static_cast<int>(blocks.size()); }
  std::string to_string() const;
  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

struct OrderedMultisetPartition {
  Blocks blocks;

  OrderedMultisetPartition() = default;
  /// Throws std::invalid_argument on empty blocks or repeated letters inside a block.
  explicit OrderedMultisetPartition(Blocks b);
  int n() const;
  int k() const { return static_cast<int>(blocks.size()); }
  std::string to_string() const;
  friend bool operator==(const OrderedMultisetPartition&, const OrderedMultisetPartition&) = default;
};

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // English convention, row 0 on top

  StandardTableau() = default;
  /// Throws std::invalid_argument unless rows increase, columns increase and 1..n each occur once.
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  int n() const { return shape.size(); }
  /// i is a descent when i+1 sits in a strictly lower row.
  std::vector<int> descents() const;
  int des() const { return static_cast<int>(descents().size()); }
  int maj() const;
  std::string to_string() const;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

}  // namespace scoin::comb
