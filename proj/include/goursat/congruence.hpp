#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goursat/algebra.hpp"
#include "goursat/error.hpp"
#include "goursat/relation.hpp"

namespace goursat {

/// Two componentwise-related argument tuples whose images under `symbol`
/// are not related.
struct CompatibilityViolation {
  std::size_t op = 0;
  std::string symbol;
  std::vector<Element> lhs_args;
  std::vector<Element> rhs_args;
  Element lhs_value = 0;
  Element rhs_value = 0;

  std::string describe() const;
};

struct CongruenceVerdict {
  bool holds = true;
  std::optional<CompatibilityViolation> witness;
};

class NotCongruenceError : public Error {
 public:
  NotCongruenceError(const FiniteAlgebra& alg, CompatibilityViolation witness);
  const CompatibilityViolation& witness() const { return witness_; }

 private:
  CompatibilityViolation witness_;
};

/// The witness, when present, is the lexicographically least violating pair
/// of tuples for the first violated operation in signature order.
CongruenceVerdict is_congruence(const FiniteAlgebra& alg, const Partition& p);
void require_congruence(const FiniteAlgebra& alg, const Partition& p);

/// Least congruence containing `pairs`.
Partition congruence_generated(const FiniteAlgebra& alg, std::span<const ElementPair> pairs);
Partition principal_congruence(const FiniteAlgebra& alg, Element a, Element b);
/// Least congruence containing r and s; both must be congruences.
Partition join(const FiniteAlgebra& alg, const Partition& r, const Partition& s);

struct LatticeOptions {
  std::size_t max_size = 64;
};

/// Con(A) with its order, meet and join tables. Elements are sorted by
/// canonical_less, so the top (one block) comes first.
class CongruenceLattice {
 public:
  CongruenceLattice(std::vector<Partition> elements, std::vector<std::size_t> join_table);

  const std::vector<Partition>& elements() const { return elements_; }
  const Partition& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(const Partition& p) const;
  std::size_t index_of(const Partition& p) const;
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  bool leq(std::size_t i, std::size_t j) const { return meet(i, j) == i; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Hasse diagram edges (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Length of the longest chain from the bottom to element i.
  std::vector<std::size_t> ranks() const;

 private:
  std::vector<Partition> elements_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Principal congruences closed under binary joins. Refuses carriers larger
/// than options.max_size with BoundError.
CongruenceLattice con_lattice(const FiniteAlgebra& alg, const LatticeOptions& options = {});

/// {(f(a), f(b)) : (a,b) in s} without any closure step.
BinRel raw_image(std::span<const Element> map, std::size_t target_size, const Partition& s);
/// Equivalence closure of the raw image.
Partition direct_image(std::span<const Element> map, std::size_t target_size, const Partition& s);
Partition direct_image(const QuotientMap& f, const Partition& s);
Partition direct_image(const Homomorphism& f, const Partition& s);

Partition inverse_image(std::span<const Element> map, const Partition& s);
Partition inverse_image(const QuotientMap& f, const Partition& s);
Partition inverse_image(const Homomorphism& f, const Partition& s);

}  // namespace goursat
