#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goursat/algebra.hpp"
#include "goursat/term.hpp"

namespace goursat {

/// A term compiled against one algebra: symbols resolved to table indices
/// and variables to positions in a fixed variable list.
class TermEvaluator {
 public:
  TermEvaluator(const FiniteAlgebra& alg, const Term& t, const std::vector<std::string>& vars);

  /// `assignment[i]` is the value of vars[i].
  Element operator()(std::span<const Element> assignment) const;

 private:
  struct Step {
    bool is_variable;
    std::size_t index;  // variable position or operation index
    unsigned arity;
  };
  const FiniteAlgebra* alg_;
  std::vector<Step> program_;  // postfix
  std::size_t max_stack_ = 0;
};

Element eval_term(const FiniteAlgebra& alg, const Term& t, const std::map<std::string, Element>& env);

struct IdentityVerdict {
  bool holds = true;
  /// Lexicographically least falsifying assignment, aligned with Identity::vars.
  std::optional<std::vector<Element>> witness;
};

IdentityVerdict satisfies_identity(const FiniteAlgebra& alg, const Identity& id);

}  // namespace goursat
