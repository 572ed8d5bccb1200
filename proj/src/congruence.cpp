#include "goursat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "goursat/detail/tuples.hpp"

namespace goursat {

using detail::for_each_tuple;

namespace {

std::string tuple_text(const std::vector<Element>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

// Lexicographically least pair of related tuples (lhs, rhs) for `op` whose
// images are unrelated.
std::optional<CompatibilityViolation> least_violation(const FiniteAlgebra& alg, const Partition& p,
                                                      std::size_t op) {
  const unsigned arity = alg.arity(op);
  const auto blocks = p.blocks();
  std::optional<CompatibilityViolation> found;
  std::vector<Element> rhs(arity);
  for_each_tuple(alg.size(), arity, [&](std::span<const Element> lhs) {
    if (found) return;
    const Element lv = alg.apply(op, lhs);
    // Enumerate rhs over the product of the blocks of lhs, in ascending order.
    std::vector<std::size_t> pos(arity, 0);
    while (true) {
      for (unsigned k = 0; k < arity; ++k) rhs[k] = blocks[p.block_of(lhs[k])][pos[k]];
      const Element rv = alg.apply(op, rhs);
      if (!p.related(lv, rv)) {
        found = CompatibilityViolation{op, alg.signature().op(op).name,
                                       std::vector<Element>(lhs.begin(), lhs.end()), rhs, lv, rv};
        return;
      }
      bool advanced = false;
      for (unsigned k = arity; k-- > 0;) {
        if (++pos[k] < blocks[p.block_of(lhs[k])].size()) {
          advanced = true;
          break;
        }
        pos[k] = 0;
      }
      if (!advanced) break;
    }
  });
  return found;
}

// Compatibility with each argument position separately against the block's
// least element; equivalent to full compatibility by transitivity.
bool compatible(const FiniteAlgebra& alg, const Partition& p, std::size_t op) {
  const unsigned arity = alg.arity(op);
  std::vector<Element> rep(p.block_count(), 0);
  for (Element e = alg.size(); e-- > 0;) rep[p.block_of(e)] = e;
  bool ok = true;
  std::vector<Element> moved(arity);
  for_each_tuple(alg.size(), arity, [&](std::span<const Element> args) {
    if (!ok) return;
    const Element v = alg.apply(op, args);
    for (unsigned k = 0; k < arity && ok; ++k) {
      std::copy(args.begin(), args.end(), moved.begin());
      moved[k] = rep[p.block_of(args[k])];
      if (!p.related(v, alg.apply(op, moved))) ok = false;
    }
  });
  return ok;
}

}  // namespace

std::string CompatibilityViolation::describe() const {
  return symbol + tuple_text(lhs_args) + " = " + std::to_string(lhs_value) + " but " + symbol +
         tuple_text(rhs_args) + " = " + std::to_string(rhs_value);
}

NotCongruenceError::NotCongruenceError(const FiniteAlgebra& alg, CompatibilityViolation witness)
    : Error("partition is not a congruence of '" + alg.name() + "': " + witness.describe()),
      witness_(std::move(witness)) {}

CongruenceVerdict is_congruence(const FiniteAlgebra& alg, const Partition& p) {
  if (p.size() != alg.size())
    throw SizeError("partition on " + std::to_string(p.size()) + " elements, algebra '" +
                    alg.name() + "' has " + std::to_string(alg.size()));
  for (std::size_t op = 0; op < alg.signature().size(); ++op) {
    if (compatible(alg, p, op)) continue;
    return CongruenceVerdict{false, least_violation(alg, p, op)};
  }
  return {};
}

void require_congruence(const FiniteAlgebra& alg, const Partition& p) {
  if (auto v = is_congruence(alg, p); !v.holds) throw NotCongruenceError(alg, *v.witness);
}

Partition congruence_generated(const FiniteAlgebra& alg, std::span<const ElementPair> pairs) {
  const std::size_t n = alg.size();
  UnionFind uf(n);
  std::deque<ElementPair> work;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw SizeError("pair element out of range");
    work.emplace_back(a, b);
  }
  const Signature& sig = alg.signature();
  std::vector<Element> args;
  // Every successful union is pushed through all unary translations; the
  // merged pairs span each class, so this reaches the compatible closure.
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const unsigned arity = sig.op(op).arity;
      if (arity == 0) continue;
      for_each_tuple(n, arity - 1, [&](std::span<const Element> rest) {
        args.assign(arity, 0);
        for (unsigned k = 0; k < arity; ++k) {
          for (unsigned j = 0, r = 0; j < arity; ++j)
            if (j != k) args[j] = rest[r++];
          args[k] = a;
          const Element x = alg.apply(op, args);
          args[k] = b;
          const Element y = alg.apply(op, args);
          if (x != y) work.emplace_back(x, y);
        }
      });
    }
  }
  return uf.partition();
}

Partition principal_congruence(const FiniteAlgebra& alg, Element a, Element b) {
  const ElementPair p{a, b};
  return congruence_generated(alg, std::span<const ElementPair>(&p, 1));
}

Partition join(const FiniteAlgebra& alg, const Partition& r, const Partition& s) {
  require_congruence(alg, r);
  require_congruence(alg, s);
  std::vector<ElementPair> pairs;
  for (const auto* p : {&r, &s})
    for (const auto& block : p->blocks())
      for (std::size_t i = 1; i < block.size(); ++i) pairs.emplace_back(block[0], block[i]);
  return congruence_generated(alg, pairs);
}

CongruenceLattice::CongruenceLattice(std::vector<Partition> elements, std::vector<std::size_t> join_table)
    : elements_(std::move(elements)), join_(std::move(join_table)) {
  const std::size_t m = elements_.size();
  if (join_.size() != m * m) throw SizeError("join table has the wrong size");
  meet_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) meet_[i * m + j] = index_of(elements_[i].meet(elements_[j]));
  for (std::size_t i = 0; i < m; ++i) {
    if (elements_[i].is_discrete()) bottom_ = i;
    if (elements_[i].is_total()) top_ = i;
  }
}

std::optional<std::size_t> CongruenceLattice::find(const Partition& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return i;
  return std::nullopt;
}

std::size_t CongruenceLattice::index_of(const Partition& p) const {
  if (auto i = find(p)) return *i;
  throw Error("partition " + to_literal(p) + " is not in the congruence lattice");
}

std::vector<std::pair<std::size_t, std::size_t>> CongruenceLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = size();
  for (std::size_t lo = 0; lo < m; ++lo)
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (lo == hi || !leq(lo, hi)) continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < m && covering; ++mid)
        if (mid != lo && mid != hi && leq(lo, mid) && leq(mid, hi)) covering = false;
      if (covering) out.emplace_back(lo, hi);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> CongruenceLattice::ranks() const {
  // Block count strictly decreases along the order, so processing by
  // descending block count visits lower elements first.
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements_[a].block_count() > elements_[b].block_count();
  });
  std::vector<std::size_t> rank(size(), 0);
  const auto edges = covers();
  for (std::size_t v : order)
    for (auto [lo, hi] : edges)
      if (hi == v) rank[v] = std::max(rank[v], rank[lo] + 1);
  return rank;
}

CongruenceLattice con_lattice(const FiniteAlgebra& alg, const LatticeOptions& options) {
  const std::size_t n = alg.size();
  if (n > options.max_size)
    throw BoundError("carrier of '" + alg.name() + "' has " + std::to_string(n) +
                     " elements, above the lattice enumeration bound " + std::to_string(options.max_size));
  std::vector<Partition> found{Partition::discrete(n)};
  auto known = [&](const Partition& p) { return std::find(found.begin(), found.end(), p) != found.end(); };
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      Partition p = principal_congruence(alg, a, b);
      if (!known(p)) found.push_back(std::move(p));
    }
  // Close under joins; every congruence is a join of principal ones.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Partition p = join(alg, found[i], found[j]);
      if (!known(p)) found.push_back(std::move(p));
    }
  std::sort(found.begin(), found.end(), canonical_less);
  const std::size_t m = found.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i)
    index.emplace(std::vector<std::size_t>(found[i].labels().begin(), found[i].labels().end()), i);
  std::vector<std::size_t> join_table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t k;
      if (found[i].refines(found[j])) k = j;
      else if (found[j].refines(found[i])) k = i;
      else {
        Partition p = join(alg, found[i], found[j]);
        k = index.at(std::vector<std::size_t>(p.labels().begin(), p.labels().end()));
      }
      join_table[i * m + j] = join_table[j * m + i] = k;
    }
  return CongruenceLattice(std::move(found), std::move(join_table));
}

BinRel raw_image(std::span<const Element> map, std::size_t target_size, const Partition& s) {
  if (map.size() != s.size()) throw SizeError("relation is not on the source of the map");
  BinRel out(target_size);
  for (const auto& block : s.blocks())
    for (Element a : block)
      for (Element b : block) out.set(map[a], map[b]);
  return out;
}

Partition direct_image(std::span<const Element> map, std::size_t target_size, const Partition& s) {
  if (map.size() != s.size()) throw SizeError("relation is not on the source of the map");
  UnionFind uf(target_size);
  for (const auto& block : s.blocks())
    for (Element a : block) uf.unite(map[block.front()], map[a]);
  return uf.partition();
}

Partition direct_image(const QuotientMap& f, const Partition& s) {
  return direct_image(f.map, f.target.size(), s);
}

Partition direct_image(const Homomorphism& f, const Partition& s) {
  return direct_image(f.map, f.target.size(), s);
}

Partition inverse_image(std::span<const Element> map, const Partition& s) {
  std::vector<std::size_t> labels(map.size());
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (map[a] >= s.size()) throw SizeError("relation is not on the target of the map");
    labels[a] = s.block_of(map[a]);
  }
  return Partition(std::move(labels));
}

Partition inverse_image(const QuotientMap& f, const Partition& s) {
  if (s.size() != f.target.size()) throw SizeError("relation is not on the target of the map");
  return inverse_image(f.map, s);
}

Partition inverse_image(const Homomorphism& f, const Partition& s) {
  if (s.size() != f.target.size()) throw SizeError("relation is not on the target of the map");
  return inverse_image(f.map, s);
}

}  // namespace goursat
