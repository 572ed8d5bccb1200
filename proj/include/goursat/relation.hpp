#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace goursat {

using Element = std::uint32_t;
using ElementPair = std::pair<Element, Element>;

class Partition;

/// Binary relation on {0..n-1} stored as an n x n bit matrix, one packed row
/// per element.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(std::size_t n);

  static BinRel identity(std::size_t n);
  static BinRel full(std::size_t n);
  static BinRel from_pairs(std::size_t n, std::span<const ElementPair> pairs);

  std::size_t size() const { return n_; }
  bool test(Element a, Element b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(Element a, Element b) { rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }

  std::size_t count() const;
  std::vector<ElementPair> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }
  bool subset_of(const BinRel& other) const;

  BinRel& operator|=(const BinRel& other);
  friend BinRel operator|(BinRel a, const BinRel& b) { return a |= b; }

  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  friend BinRel compose(const BinRel& r, const BinRel& s);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Left-to-right relational composition: (x,z) in the result iff there is a
/// y with (x,y) in r and (y,z) in s.
BinRel compose(const BinRel& r, const BinRel& s);

/// Equivalence relation in canonical form. Elements are labelled by block;
/// blocks are numbered in order of their least element, so two partitions
/// are equal exactly when their label vectors are.
class Partition {
 public:
  Partition() = default;
  /// Any block labelling; canonicalised on construction.
  explicit Partition(std::vector<std::size_t> labels);

  static Partition discrete(std::size_t n);
  static Partition total(std::size_t n);
  /// Blocks must be disjoint and cover 0..n-1; any order is accepted.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);

  std::size_t size() const { return labels_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(Element a) const { return labels_[a]; }
  bool related(Element a, Element b) const { return labels_[a] == labels_[b]; }
  std::span<const std::size_t> labels() const { return labels_; }
  std::vector<std::vector<Element>> blocks() const;

  bool is_discrete() const { return block_count_ == labels_.size(); }
  bool is_total() const { return block_count_ <= 1; }

  /// this is contained in other as a set of pairs.
  bool refines(const Partition& other) const;
  Partition meet(const Partition& other) const;
  BinRel to_relation() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> labels_;
  std::size_t block_count_ = 0;
};

/// Ordering used for every sorted list of partitions: fewer blocks first,
/// then lexicographic comparison of the canonical block lists.
bool canonical_less(const Partition& a, const Partition& b);

/// Least equivalence relation containing r.
Partition equivalence_closure(const BinRel& r);

/// `0 2|1 3`: blocks separated by `|`, elements by whitespace.
std::string to_literal(const Partition& p);
/// Parses a partition literal over {0..n-1}. Elements missing from the
/// literal are rejected, as are repeats and out-of-range values.
Partition parse_partition(std::string_view text, std::size_t n);

std::string to_pair_list(const BinRel& r);

/// Union-find over {0..n-1} with path halving; the smaller root wins a union.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Element find(Element a);
  /// Returns true when a and b were in different classes.
  bool unite(Element a, Element b);
  Partition partition();

 private:
  std::vector<Element> parent_;
};

}  // namespace goursat
