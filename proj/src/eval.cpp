#include "goursat/eval.hpp"

#include <algorithm>

#include "goursat/detail/tuples.hpp"
#include "goursat/error.hpp"

namespace goursat {

namespace {

void compile(const FiniteAlgebra& alg, const Term& t, const std::vector<std::string>& vars,
             std::vector<std::pair<bool, std::pair<std::size_t, unsigned>>>& out) {
  if (t.is_variable()) {
    if (alg.signature().find(t.name()))
      throw SignatureError("variable '" + t.name() + "' collides with an operation symbol of '" +
                           alg.name() + "'");
    auto it = std::find(vars.begin(), vars.end(), t.name());
    if (it == vars.end()) throw Error("no binding for variable '" + t.name() + "'");
    out.push_back({true, {static_cast<std::size_t>(it - vars.begin()), 0}});
    return;
  }
  auto op = alg.signature().find(t.name());
  if (!op) throw SignatureError("symbol '" + t.name() + "' is not in the signature of '" + alg.name() + "'");
  const unsigned arity = alg.arity(*op);
  if (arity != t.args().size())
    throw SignatureError("symbol '" + t.name() + "' has arity " + std::to_string(arity) + " in '" +
                         alg.name() + "'");
  for (const auto& a : t.args()) compile(alg, a, vars, out);
  out.push_back({false, {*op, arity}});
}

}  // namespace

TermEvaluator::TermEvaluator(const FiniteAlgebra& alg, const Term& t, const std::vector<std::string>& vars)
    : alg_(&alg) {
  std::vector<std::pair<bool, std::pair<std::size_t, unsigned>>> raw;
  compile(alg, t, vars, raw);
  std::size_t depth = 0;
  for (const auto& [is_var, data] : raw) {
    program_.push_back(Step{is_var, data.first, data.second});
    depth = is_var ? depth + 1 : depth - data.second + 1;
    max_stack_ = std::max(max_stack_, depth);
  }
}

Element TermEvaluator::operator()(std::span<const Element> assignment) const {
  std::vector<Element> stack;
  stack.reserve(max_stack_);
  for (const auto& step : program_) {
    if (step.is_variable) {
      stack.push_back(assignment[step.index]);
      continue;
    }
    const std::size_t base = stack.size() - step.arity;
    Element v = alg_->apply(step.index, std::span<const Element>(stack).subspan(base));
    stack.resize(base);
    stack.push_back(v);
  }
  return stack.back();
}

Element eval_term(const FiniteAlgebra& alg, const Term& t, const std::map<std::string, Element>& env) {
  std::vector<std::string> vars = variables(t);
  std::vector<Element> values;
  for (const auto& v : vars) {
    auto it = env.find(v);
    if (it == env.end()) throw Error("no binding for variable '" + v + "'");
    if (it->second >= alg.size())
      throw SizeError("value " + std::to_string(it->second) + " for '" + v + "' outside the carrier");
    values.push_back(it->second);
  }
  return TermEvaluator(alg, t, vars)(values);
}

IdentityVerdict satisfies_identity(const FiniteAlgebra& alg, const Identity& id) {
  TermEvaluator lhs(alg, id.lhs, id.vars);
  TermEvaluator rhs(alg, id.rhs, id.vars);
  IdentityVerdict verdict;
  detail::for_each_tuple(alg.size(), static_cast<unsigned>(id.vars.size()),
                         [&](std::span<const Element> a) {
                           if (!verdict.holds) return;
                           if (lhs(a) != rhs(a)) {
                             verdict.holds = false;
                             verdict.witness.emplace(a.begin(), a.end());
                           }
                         });
  return verdict;
}

}  // namespace goursat
