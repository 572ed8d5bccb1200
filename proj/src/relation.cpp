#include "goursat/relation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "goursat/error.hpp"

namespace goursat {

BinRel::BinRel(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

BinRel BinRel::identity(std::size_t n) {
  BinRel r(n);
  for (Element a = 0; a < n; ++a) r.set(a, a);
  return r;
}

BinRel BinRel::full(std::size_t n) {
  BinRel r(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) r.set(a, b);
  return r;
}

BinRel BinRel::from_pairs(std::size_t n, std::span<const ElementPair> pairs) {
  BinRel r(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw SizeError("pair element out of range");
    r.set(a, b);
  }
  return r;
}

std::size_t BinRel::count() const {
  std::size_t c = 0;
  for (auto w : rows_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<ElementPair> BinRel::pairs() const {
  std::vector<ElementPair> out;
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (test(a, b)) out.emplace_back(a, b);
  return out;
}

bool BinRel::is_reflexive() const {
  for (Element a = 0; a < n_; ++a)
    if (!test(a, a)) return false;
  return true;
}

bool BinRel::is_symmetric() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (test(a, b) != test(b, a)) return false;
  return true;
}

bool BinRel::is_transitive() const { return compose(*this, *this).subset_of(*this); }

bool BinRel::subset_of(const BinRel& other) const {
  if (n_ != other.n_) throw SizeError("relation size mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] & ~other.rows_[i]) return false;
  return true;
}

BinRel& BinRel::operator|=(const BinRel& other) {
  if (n_ != other.n_) throw SizeError("relation size mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  if (r.n_ != s.n_) throw SizeError("cannot compose relations on carriers of sizes " +
                                    std::to_string(r.n_) + " and " + std::to_string(s.n_));
  BinRel out(r.n_);
  const std::size_t w = r.words_;
  for (std::size_t x = 0; x < r.n_; ++x) {
    std::uint64_t* dst = out.rows_.data() + x * w;
    for (std::size_t word = 0; word < w; ++word) {
      std::uint64_t bits = r.rows_[x * w + word];
      while (bits) {
        std::size_t y = word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* src = s.rows_.data() + y * w;
        for (std::size_t k = 0; k < w; ++k) dst[k] |= src[k];
      }
    }
  }
  return out;
}

Partition::Partition(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
  std::vector<std::size_t> remap;
  constexpr auto unset = static_cast<std::size_t>(-1);
  for (auto& l : labels_) {
    if (l >= remap.size()) remap.resize(l + 1, unset);
    if (remap[l] == unset) remap[l] = block_count_++;
    l = remap[l];
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Partition(std::move(labels));
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw SizeError("empty block in partition");
    for (Element e : blocks[b]) {
      if (e >= n) throw SizeError("element " + std::to_string(e) + " out of range 0.." + std::to_string(n - 1));
      if (labels[e] != unset) throw SizeError("element " + std::to_string(e) + " appears twice");
      labels[e] = b;
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (labels[e] == unset) throw SizeError("element " + std::to_string(e) + " missing from partition");
  return Partition(std::move(labels));
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(block_count_);
  for (Element e = 0; e < labels_.size(); ++e) out[labels_[e]].push_back(e);
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (size() != other.size()) throw SizeError("partition size mismatch");
  // Each of our blocks must land in a single block of other.
  std::vector<std::size_t> image(block_count_, static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    auto& slot = image[labels_[e]];
    if (slot == static_cast<std::size_t>(-1)) slot = other.labels_[e];
    else if (slot != other.labels_[e]) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (size() != other.size()) throw SizeError("partition size mismatch");
  std::vector<std::size_t> labels(size());
  for (std::size_t e = 0; e < size(); ++e) labels[e] = labels_[e] * other.block_count_ + other.labels_[e];
  return Partition(std::move(labels));
}

BinRel Partition::to_relation() const {
  BinRel r(size());
  auto bs = blocks();
  for (const auto& b : bs)
    for (Element x : b)
      for (Element y : b) r.set(x, y);
  return r;
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
  return a.blocks() < b.blocks();
}

UnionFind::UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

Element UnionFind::find(Element a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool UnionFind::unite(Element a, Element b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

Partition UnionFind::partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (Element e = 0; e < parent_.size(); ++e) labels[e] = find(e);
  return Partition(std::move(labels));
}

Partition equivalence_closure(const BinRel& r) {
  UnionFind uf(r.size());
  for (auto [a, b] : r.pairs()) uf.unite(a, b);
  return uf.partition();
}

std::string to_literal(const Partition& p) {
  std::string out;
  auto bs = p.blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(bs[b][i]);
    }
  }
  return out;
}

Partition parse_partition(std::string_view text, std::size_t n) {
  std::vector<std::vector<Element>> blocks(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '|') {
      blocks.emplace_back();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > n) throw ParseError("element out of range at column " + std::to_string(start), 0, start);
        ++i;
      }
      blocks.back().push_back(static_cast<Element>(v));
    } else {
      throw ParseError("unexpected '" + std::string(1, c) + "' in partition literal at column " +
                           std::to_string(i),
                       0, i);
    }
  }
  if (n == 0 && blocks.size() == 1 && blocks[0].empty()) return Partition{};
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const SizeError& e) {
    throw ParseError(std::string("invalid partition literal: ") + e.what(), 0, 0);
  }
}

std::string to_pair_list(const BinRel& r) {
  std::string out;
  for (auto [a, b] : r.pairs()) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

}  // namespace goursat
