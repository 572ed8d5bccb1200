#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"

namespace goursat {

struct LatticeVerdict {
  bool holds = true;
  /// Lattice indices (a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), least in index order.
  std::optional<std::array<std::size_t, 3>> witness;
};

LatticeVerdict is_distributive(const CongruenceLattice& lattice);

/// Failure data for the quotient-based checks: f is the quotient by
/// `kernel`, r and s are congruences of its source.
struct ImageWitness {
  Partition kernel;
  Partition r;
  Partition s;
  Partition lhs;  // value of the left-hand side on the quotient
  Partition rhs;
};

struct ImageVerdict {
  bool holds = true;
  std::optional<ImageWitness> witness;
};

/// f(r∧s) = f(r)∧f(s) for every quotient map f and congruences r, s. The
/// witness is least in (r index, s index, quotient index).
ImageVerdict image_meet_check(const FiniteAlgebra& alg, const LatticeOptions& options = {});

/// f(closure of r∧s) = closure of f(r) ∧ closure of f(s), same quantifiers.
ImageVerdict check_axiom7(const FiniteAlgebra& alg, const SubvarietySpec& v,
                          const LatticeOptions& options = {});

struct MeetIdentityVerdict {
  bool applicable = true;
  bool holds = true;
  std::optional<std::array<Partition, 2>> witness;
};

/// closure(r)∧closure(s) = closure(r∧s) on an algebra with distributive Con;
/// not applicable otherwise.
MeetIdentityVerdict closure_meet_identity_check(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                                const LatticeOptions& options = {});

struct DistReport {
  std::string algebra;
  std::string spec;
  CongruenceLattice lattice;
  LatticeVerdict lattice_distributive;
  ImageVerdict image_meet;
  ImageVerdict axiom7;

  /// The three verdicts agree.
  bool consistent() const;
};

DistReport distributivity_report(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                 const LatticeOptions& options = {});

}  // namespace goursat
