#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goursat/algebra.hpp"
#include "goursat/closure.hpp"
#include "goursat/permutability.hpp"

namespace goursat {

enum class PermutabilityClass { maltsev, goursat_only, neither };
std::string to_string(PermutabilityClass c);

struct CorpusTags {
  PermutabilityClass permutability = PermutabilityClass::neither;
  bool distributive = false;
  /// "vacuous" when Con is too small to exhibit a non-permuting pair.
  std::optional<std::string> note;
};

struct CorpusEntry {
  std::string name;  // e.g. "cyclic_group(4)"
  std::string family;
  std::optional<unsigned> param;
  FiniteAlgebra algebra;
  CorpusTags tags;
  std::vector<std::string> specs;  // names of applicable corpus specs
};

/// Builds a corpus algebra and machine-checks the defining identities of its
/// family (group, commutative von Neumann regular ring, Heyting algebra,
/// implication algebra, lattice). Families:
///   cyclic_group(n), klein4, sym3, boolean_ring(k), zmod_vnr(n),
///   heyting_chain(k), implication_from_boolean(k), implication_nonzero(k),
///   two_elt_lattice, lattice_chain(k)
CorpusEntry builtin(const std::string& family, std::optional<unsigned> param = std::nullopt);
/// Accepts `family`, `family(p)` or `family:p`.
CorpusEntry builtin_from_string(const std::string& text);

/// Every entry of the built-in corpus, in a fixed order.
std::vector<CorpusEntry> default_corpus();

/// trivial, all, abelian-group, exponent-2, boolean-from-heyting, idempotent-ring.
std::vector<SubvarietySpec> corpus_specs();
SubvarietySpec corpus_spec(const std::string& name);
/// The `trivial` and `all` specs carry an empty signature and apply everywhere.
std::vector<SubvarietySpec> applicable_specs(const FiniteAlgebra& alg);

/// Identities defining the entry's family, used by builtin() as a model check.
std::vector<Identity> family_identities(const std::string& family, const Signature& sig);

struct TagVerdict {
  bool holds = true;
  std::string detail;
};

/// Re-derives the structural tags: term searches, permutability of all
/// congruence pairs and distributivity of Con.
TagVerdict verify_tags(const CorpusEntry& entry, const CloneOptions& options = {});

}  // namespace goursat
