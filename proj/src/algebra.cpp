#include "goursat/algebra.hpp"

#include <functional>

#include "goursat/congruence.hpp"
#include "goursat/detail/tuples.hpp"
#include "goursat/error.hpp"

namespace goursat {

using detail::for_each_tuple;
using detail::power;

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                             std::vector<std::vector<Element>> tables)
    : name_(std::move(name)), sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (size_ == 0) throw SizeError("algebra '" + name_ + "' has an empty carrier");
  if (tables_.size() != sig_.size())
    throw SignatureError("algebra '" + name_ + "': " + std::to_string(tables_.size()) +
                         " tables for " + std::to_string(sig_.size()) + " symbols");
  for (std::size_t op = 0; op < sig_.size(); ++op) {
    if (tables_[op].size() != power(size_, sig_.op(op).arity))
      throw SizeError("algebra '" + name_ + "': table for '" + sig_.op(op).name + "' has " +
                      std::to_string(tables_[op].size()) + " entries, expected " +
                      std::to_string(power(size_, sig_.op(op).arity)));
    for (Element v : tables_[op])
      if (v >= size_)
        throw SizeError("algebra '" + name_ + "': table for '" + sig_.op(op).name +
                        "' has entry " + std::to_string(v) + " outside the carrier");
  }
}

std::size_t FiniteAlgebra::table_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (Element a : args) idx = idx * size_ + a;
  return idx;
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  return tables_[op][table_index(args)];
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::size_t FiniteAlgebra::structural_hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (std::size_t op = 0; op < sig_.size(); ++op) {
    mix(std::hash<std::string>{}(sig_.op(op).name));
    mix(sig_.op(op).arity);
    for (Element v : tables_[op]) mix(v);
  }
  return h;
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
  return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
}

Homomorphism QuotientMap::as_homomorphism() const {
  return Homomorphism{"quotient by " + to_literal(kernel), source, target, map};
}

std::size_t product_encode(std::span<const std::size_t> sizes, std::span<const Element> coords) {
  std::size_t code = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) code = code * sizes[i] + coords[i];
  return code;
}

std::vector<Element> product_decode(std::span<const std::size_t> sizes, Element code) {
  std::vector<Element> coords(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(code % sizes[i]);
    code = static_cast<Element>(code / sizes[i]);
  }
  return coords;
}

FiniteAlgebra product(std::span<const FiniteAlgebra> algs) {
  if (algs.empty()) return FiniteAlgebra("product()", Signature{}, 1, {});
  const Signature& sig = algs.front().signature();
  std::string name = "product(";
  std::vector<std::size_t> sizes;
  std::size_t n = 1;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    if (!(algs[i].signature() == sig))
      throw SignatureError("product factors '" + algs.front().name() + "' and '" + algs[i].name() +
                           "' have different signatures");
    sizes.push_back(algs[i].size());
    n *= algs[i].size();
    name += (i ? "," : "") + algs[i].name();
  }
  name += ")";
  std::vector<std::vector<Element>> tables;
  std::vector<Element> factor_args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const unsigned arity = sig.op(op).arity;
    std::vector<Element> table;
    table.reserve(power(n, arity));
    std::vector<std::vector<Element>> decoded(arity);
    for_each_tuple(n, arity, [&](std::span<const Element> args) {
      for (unsigned k = 0; k < arity; ++k) decoded[k] = product_decode(sizes, args[k]);
      std::vector<Element> result(algs.size());
      factor_args.resize(arity);
      for (std::size_t i = 0; i < algs.size(); ++i) {
        for (unsigned k = 0; k < arity; ++k) factor_args[k] = decoded[k][i];
        result[i] = algs[i].apply(op, factor_args);
      }
      table.push_back(static_cast<Element>(product_encode(sizes, result)));
    });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(std::move(name), sig, n, std::move(tables));
}

QuotientMap quotient(const FiniteAlgebra& alg, const Partition& theta) {
  if (theta.size() != alg.size())
    throw SizeError("partition on " + std::to_string(theta.size()) + " elements, algebra '" +
                    alg.name() + "' has " + std::to_string(alg.size()));
  if (auto verdict = is_congruence(alg, theta); !verdict.holds)
    throw NotCongruenceError(alg, *verdict.witness);
  const std::size_t m = theta.block_count();
  auto blocks = theta.blocks();
  std::vector<Element> map(alg.size());
  for (Element e = 0; e < alg.size(); ++e) map[e] = static_cast<Element>(theta.block_of(e));
  const Signature& sig = alg.signature();
  std::vector<std::vector<Element>> tables;
  std::vector<Element> reps;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Element> table;
    for_each_tuple(m, sig.op(op).arity, [&](std::span<const Element> args) {
      reps.assign(args.size(), 0);
      for (std::size_t k = 0; k < args.size(); ++k) reps[k] = blocks[args[k]].front();
      table.push_back(map[alg.apply(op, reps)]);
    });
    tables.push_back(std::move(table));
  }
  FiniteAlgebra target(alg.name() + "/[" + to_literal(theta) + "]", sig, m, std::move(tables));
  return QuotientMap{alg, theta, std::move(target), std::move(map)};
}

Partition kernel_pair(std::span<const Element> map) {
  return Partition(std::vector<std::size_t>(map.begin(), map.end()));
}

Partition kernel_pair(const QuotientMap& f) { return kernel_pair(f.map); }

std::set<Element> generate_subuniverse(const FiniteAlgebra& alg, const std::set<Element>& seed) {
  std::vector<bool> in(alg.size(), false);
  std::vector<Element> members;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  for (Element e : seed) {
    if (e >= alg.size()) throw SizeError("seed element out of range");
    add(e);
  }
  const Signature& sig = alg.signature();
  for (std::size_t op = 0; op < sig.size(); ++op)
    if (sig.op(op).arity == 0) add(alg.table(op)[0]);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t before = members.size();
    std::vector<Element> snapshot = members;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const unsigned arity = sig.op(op).arity;
      if (arity == 0 || snapshot.empty()) continue;
      std::vector<Element> args(arity);
      for_each_tuple(snapshot.size(), arity, [&](std::span<const Element> idx) {
        for (unsigned k = 0; k < arity; ++k) args[k] = snapshot[idx[k]];
        add(alg.apply(op, args));
      });
    }
    grew = members.size() != before;
  }
  return std::set<Element>(members.begin(), members.end());
}

Homomorphism subalgebra_inclusion(const FiniteAlgebra& alg, const std::set<Element>& subuniverse) {
  if (subuniverse.empty()) throw SizeError("empty subuniverse has no subalgebra");
  std::vector<Element> members(subuniverse.begin(), subuniverse.end());
  std::vector<Element> index(alg.size(), static_cast<Element>(-1));
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;
  const Signature& sig = alg.signature();
  std::vector<std::vector<Element>> tables;
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Element> table;
    for_each_tuple(members.size(), sig.op(op).arity, [&](std::span<const Element> idx) {
      args.assign(idx.size(), 0);
      for (std::size_t k = 0; k < idx.size(); ++k) args[k] = members[idx[k]];
      Element v = index[alg.apply(op, args)];
      if (v == static_cast<Element>(-1)) throw Error("subset is not closed under '" + sig.op(op).name + "'");
      table.push_back(v);
    });
    tables.push_back(std::move(table));
  }
  std::string name = alg.name() + "{";
  for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + std::to_string(members[i]);
  name += "}";
  FiniteAlgebra sub(name, sig, members.size(), std::move(tables));
  return Homomorphism{"inclusion " + name + " -> " + alg.name(), std::move(sub), alg, members};
}

Homomorphism projection(std::span<const FiniteAlgebra> factors, std::size_t i) {
  FiniteAlgebra prod = product(factors);
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.size());
  std::vector<Element> map(prod.size());
  for (Element e = 0; e < prod.size(); ++e) map[e] = product_decode(sizes, e)[i];
  std::string desc = "projection " + prod.name() + " -> " + factors[i].name();
  return Homomorphism{std::move(desc), std::move(prod), factors[i], std::move(map)};
}

bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     std::span<const Element> map) {
  if (!(source.signature() == target.signature())) return false;
  if (map.size() != source.size()) return false;
  for (Element v : map)
    if (v >= target.size()) return false;
  const Signature& sig = source.signature();
  std::vector<Element> mapped;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    bool ok = true;
    for_each_tuple(source.size(), sig.op(op).arity, [&](std::span<const Element> args) {
      if (!ok) return;
      mapped.assign(args.size(), 0);
      for (std::size_t k = 0; k < args.size(); ++k) mapped[k] = map[args[k]];
      if (map[source.apply(op, args)] != target.apply(op, mapped)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace goursat
