#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "goursat/algebra.hpp"
#include "goursat/congruence.hpp"
#include "goursat/error.hpp"
#include "goursat/relation.hpp"
#include "goursat/term.hpp"

namespace goursat {

/// Equational axiomatization of a subvariety. `sig` lists the symbols the
/// identities use; the spec applies to any algebra whose signature contains it.
struct SubvarietySpec {
  std::string name;
  Signature sig;
  std::vector<Identity> identities;
};

SubvarietySpec make_spec(std::string name, Signature sig, const std::vector<std::string>& identities);
/// Spec from `.ids` text parsed against an algebra signature. The spec
/// signature is reduced to the symbols the identities mention.
SubvarietySpec parse_spec(std::string name, std::string_view ids_text, const Signature& sig);

bool applicable(const SubvarietySpec& v, const FiniteAlgebra& alg);
void require_applicable(const SubvarietySpec& v, const FiniteAlgebra& alg);

/// Least congruence theta with alg/theta satisfying every identity of v.
Partition birkhoff_congruence(const FiniteAlgebra& alg, const SubvarietySpec& v);
/// Quotient of alg by its Birkhoff congruence.
QuotientMap reflect(const FiniteAlgebra& alg, const SubvarietySpec& v);

struct ClosureResult {
  Partition input;
  Partition closure;
  Partition delta_bar;
  QuotientMap reflection;  // alg -> alg / closure
  bool closed = false;
  bool dense = false;
};

/// Raised when Δ̄∘S∘Δ̄ is not an equivalence relation or differs from S∘Δ̄∘S,
/// i.e. the algebra violates the 3-permutability the formula relies on.
class GoursatViolation : public Error {
 public:
  GoursatViolation(const std::string& what, BinRel left, BinRel right)
      : Error(what), left_(std::move(left)), right_(std::move(right)) {}
  const BinRel& left() const { return left_; }
  const BinRel& right() const { return right_; }

 private:
  BinRel left_;
  BinRel right_;
};

/// Closure operator of one subvariety. Birkhoff congruences are cached per
/// algebra structure; safe to share between threads.
class ClosureOperator {
 public:
  explicit ClosureOperator(SubvarietySpec v);

  const SubvarietySpec& spec() const { return spec_; }

  Partition delta_bar(const FiniteAlgebra& alg) const;
  /// Pullback of the Birkhoff congruence of alg/s along the quotient.
  ClosureResult effective(const FiniteAlgebra& alg, const Partition& s) const;
  /// Raw composite Δ̄∘S∘Δ̄, cross-checked against S∘Δ̄∘S.
  ClosureResult goursat(const FiniteAlgebra& alg, const Partition& s) const;
  Partition closure(const FiniteAlgebra& alg, const Partition& s) const { return effective(alg, s).closure; }

 private:
  ClosureResult finish(const FiniteAlgebra& alg, const Partition& s, Partition closure, Partition delta_bar) const;

  SubvarietySpec spec_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::vector<std::pair<FiniteAlgebra, Partition>>> cache_;
};

ClosureResult closure_effective(const FiniteAlgebra& alg, const Partition& s, const SubvarietySpec& v);
ClosureResult closure_goursat(const FiniteAlgebra& alg, const Partition& s, const SubvarietySpec& v);

/// s∘r_comp for a 2-permuting pair, checked equal to join(s, r_comp).
/// Throws NotPermutableError when the pair does not permute.
Partition closure_by_component(const Partition& s, const Partition& r_comp, const FiniteAlgebra& alg);

enum class Axiom {
  extensive,           // (1) S ⊆ S̄
  monotone,            // (2) S ⊆ T ⇒ S̄ ⊆ T̄
  pullback_inclusion,  // (3) closure of f⁻¹(S) ⊆ f⁻¹(S̄)
  idempotent,          // (4)
  pullback_equality,   // (5) equality in (3) for regular epis
  image,               // (6) closure of f(S) = f(S̄)
  image_delta,         // (6') f(Δ̄_X) = Δ̄_Y
  additive,            // closure of R∨S = R̄ ∨ S̄
  image_join,          // f(R∨S) = f(R) ∨ f(S)
  intersection,        // (7) f(closure of R∧S) = closure of f(R) ∧ closure of f(S)
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::extensive,         Axiom::monotone, Axiom::pullback_inclusion, Axiom::idempotent,
    Axiom::pullback_equality, Axiom::image,    Axiom::image_delta,        Axiom::additive,
    Axiom::image_join,        Axiom::intersection};

std::string axiom_label(Axiom a);
std::string axiom_key(Axiom a);

enum class AxiomStatus { pass, fail, not_applicable };
std::string to_string(AxiomStatus s);

/// Data that replays a violation: the algebra, the arrow (if the axiom
/// quantifies over arrows) and the congruences involved, in the order the
/// axiom names them.
struct AxiomWitness {
  FiniteAlgebra algebra;
  std::optional<Homomorphism> arrow;
  std::vector<Partition> relations;
  std::string detail;
};

struct AxiomResult {
  Axiom axiom = Axiom::extensive;
  AxiomStatus status = AxiomStatus::pass;
  std::optional<AxiomWitness> witness;
  std::string reason;  // for not_applicable
  std::size_t instances = 0;
};

struct AxiomBounds {
  std::size_t max_carrier = 64;
  std::size_t max_product = 64;
  bool products = true;
  bool subalgebras = true;
};

struct AxiomReport {
  std::string spec;
  AxiomBounds bounds;
  std::vector<AxiomResult> results;
  std::vector<std::string> skipped;  // algebras over the carrier bound
  std::size_t arrows = 0;

  const AxiomResult& operator[](Axiom a) const;
  bool passed() const;
};

/// Sweeps every congruence and every quotient map of each algebra, plus
/// subalgebra inclusions and binary product projections among the inputs for
/// axioms (3) and (5). Axiom (7) is checked on algebras with a distributive
/// congruence lattice only.
AxiomReport check_axioms(std::span<const FiniteAlgebra> algs, const SubvarietySpec& v,
                         const AxiomBounds& bounds = {});

struct RoundTripVerdict {
  bool holds = true;
  bool reflection_closed = true;   // Δ on alg/Δ̄ is closed
  bool closures_agree = true;      // subcategory-derived closure = direct closure
  std::optional<Partition> mismatch;  // congruence where the closures differ
  std::string detail;
};

RoundTripVerdict roundtrip_check(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                 const LatticeOptions& options = {});

}  // namespace goursat
