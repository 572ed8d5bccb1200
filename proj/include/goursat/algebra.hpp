#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "goursat/relation.hpp"
#include "goursat/signature.hpp"

namespace goursat {

/// Carrier {0..n-1} with one total table per operation symbol. Tables are
/// row-major with the last argument varying fastest.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                std::vector<std::vector<Element>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  std::size_t size() const { return size_; }
  std::span<const Element> table(std::size_t op) const { return tables_[op]; }
  unsigned arity(std::size_t op) const { return sig_.op(op).arity; }

  Element apply(std::size_t op, std::span<const Element> args) const;
  std::size_t table_index(std::span<const Element> args) const;

  FiniteAlgebra renamed(std::string name) const;

  /// Hash of signature and tables; the name does not take part.
  std::size_t structural_hash() const;
  /// Same signature and tables; the name does not take part.
  bool same_structure(const FiniteAlgebra& other) const;

 private:
  std::string name_;
  Signature sig_;
  std::size_t size_;
  std::vector<std::vector<Element>> tables_;
};

/// Map between carriers; a homomorphism when constructed by this library.
struct Homomorphism {
  std::string description;
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<Element> map;
};

/// Canonical surjection onto source/kernel. Target elements are the kernel
/// blocks, numbered by ascending least element.
struct QuotientMap {
  FiniteAlgebra source;
  Partition kernel;
  FiniteAlgebra target;
  std::vector<Element> map;

  Homomorphism as_homomorphism() const;
};

/// Mixed-radix product, leftmost factor most significant. product({}) is the
/// one-element algebra over the empty signature.
FiniteAlgebra product(std::span<const FiniteAlgebra> algs);
std::size_t product_encode(std::span<const std::size_t> sizes, std::span<const Element> coords);
std::vector<Element> product_decode(std::span<const std::size_t> sizes, Element code);

/// Throws NotCongruenceError when theta is incompatible with some operation.
QuotientMap quotient(const FiniteAlgebra& alg, const Partition& theta);
Partition kernel_pair(const QuotientMap& f);
Partition kernel_pair(std::span<const Element> map);

/// Least subuniverse containing `seed` and the nullary constants.
std::set<Element> generate_subuniverse(const FiniteAlgebra& alg, const std::set<Element>& seed);
/// The subalgebra on `subuniverse` (which must be closed), elements
/// renumbered in ascending order, with its inclusion map.
Homomorphism subalgebra_inclusion(const FiniteAlgebra& alg, const std::set<Element>& subuniverse);
/// Projection of product(factors) onto factor i.
Homomorphism projection(std::span<const FiniteAlgebra> factors, std::size_t i);

/// Checks that `map` commutes with every operation table.
bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     std::span<const Element> map);

}  // namespace goursat
