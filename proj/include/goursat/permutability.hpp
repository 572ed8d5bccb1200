#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "goursat/algebra.hpp"
#include "goursat/error.hpp"
#include "goursat/relation.hpp"
#include "goursat/term.hpp"

namespace goursat {

enum class PermutabilityLevel { two, three, neither };

std::string to_string(PermutabilityLevel level);

/// `two` if r∘s = s∘r, else `three` if r∘s∘r = s∘r∘s, else `neither`.
PermutabilityLevel permutability_level(const FiniteAlgebra& alg, const Partition& r, const Partition& s);

class NotPermutableError : public Error {
 public:
  using Error::Error;
};

struct GoursatJoinVerdict {
  bool holds = false;
  PermutabilityLevel level = PermutabilityLevel::neither;
  BinRel composite;  // r∘s∘r, no closure step
  Partition join;
};

/// Compares the raw composite r∘s∘r with join(r, s). Throws
/// NotPermutableError for a pair that is not even 3-permutable.
GoursatJoinVerdict goursat_join_check(const FiniteAlgebra& alg, const Partition& r, const Partition& s);

/// A ternary term operation: table[(a*n + b)*n + c] = t(a, b, c).
struct TermWitness {
  std::vector<Element> table;
  std::optional<Term> term;
};

struct CloneOptions {
  std::size_t cap = 200000;
  /// Keep parent derivations so witnesses come with a term.
  bool keep_derivations = true;
};

/// Ternary part of the clone generated by the basic operations. Elements are
/// in breadth-first order: by derivation depth, then lexicographically by
/// table within a depth.
class Clone3 {
 public:
  std::size_t carrier_size() const { return n_; }
  std::size_t size() const { return tables_.size(); }
  const std::vector<Element>& table(std::size_t i) const { return tables_[i]; }
  std::size_t depth(std::size_t i) const { return depths_[i]; }
  /// False when generation stopped at the cap before reaching a fixpoint.
  bool complete() const { return complete_; }
  bool has_terms() const { return !derivations_.empty(); }
  /// Variable names used for the three projections.
  const std::vector<std::string>& variable_names() const { return vars_; }

  std::optional<std::size_t> find(const std::vector<Element>& table) const;
  /// Reconstructs the generating term; requires has_terms().
  Term term(std::size_t i) const;
  TermWitness witness(std::size_t i) const;

 private:
  friend class CloneGenerator;

  struct Derivation {
    std::size_t op;  // operation index, or npos for a projection
    std::vector<std::size_t> children;  // projection index when op == npos
  };

  const FiniteAlgebra* alg_ = nullptr;
  std::size_t n_ = 0;
  std::vector<std::vector<Element>> tables_;
  std::vector<std::size_t> depths_;
  std::vector<Derivation> derivations_;
  std::vector<std::string> vars_;
  bool complete_ = false;
};

/// Breadth-first generator behind generate_clone3; exposes one level at a
/// time so searches can stop early.
class CloneGenerator {
 public:
  CloneGenerator(const FiniteAlgebra& alg, CloneOptions options);

  /// Adds the next depth level. Returns false once at fixpoint or cap.
  bool step();
  bool at_cap() const { return at_cap_; }
  const Clone3& clone() const { return clone_; }
  Clone3 take() && { return std::move(clone_); }

 private:
  void add_level(std::vector<std::pair<std::vector<Element>, Clone3::Derivation>> level);

  const FiniteAlgebra* alg_;
  CloneOptions options_;
  Clone3 clone_;
  std::vector<std::size_t> level_start_;
  struct TableHash {
    std::size_t operator()(const std::vector<Element>& t) const;
  };
  std::unordered_map<std::vector<Element>, std::size_t, TableHash> index_;
  bool done_ = false;
  bool at_cap_ = false;
};

Clone3 generate_clone3(const FiniteAlgebra& alg, const CloneOptions& options = {});

enum class SearchStatus { found, absent, inconclusive };

std::string to_string(SearchStatus status);

struct MaltsevSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<TermWitness> p;
  std::size_t explored = 0;
};

struct HagemannMitschkeSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<TermWitness> p;
  std::optional<TermWitness> q;
  std::size_t explored = 0;
};

/// p(x,y,y) = x and p(x,x,y) = y. Returns the first witness in clone order.
MaltsevSearch find_maltsev_term(const FiniteAlgebra& alg, const CloneOptions& options = {});
/// p(x,y,y) = x, q(x,x,y) = y, p(x,x,y) = q(x,y,y). Witness choice: the
/// shallowest depth at which a pair exists, then least q, then least p.
HagemannMitschkeSearch find_hm_terms(const FiniteAlgebra& alg, const CloneOptions& options = {});

/// Pointwise checks, independent of the search.
bool is_maltsev_table(std::size_t n, const std::vector<Element>& p);
bool is_hm_pair(std::size_t n, const std::vector<Element>& p, const std::vector<Element>& q);

}  // namespace goursat
