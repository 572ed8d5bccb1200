#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "goursat/signature.hpp"

namespace goursat {

/// A term over some signature: either a variable or an application of an
/// operation symbol to as many subterms as its arity. Nullary symbols are
/// applications with no children.
class Term {
 public:
  static Term variable(std::string name);
  static Term apply(std::string symbol, std::vector<Term> args = {});

  bool is_variable() const { return is_variable_; }
  /// Variable name or operation symbol.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  std::size_t depth() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(bool is_variable, std::string name, std::vector<Term> args)
      : is_variable_(is_variable), name_(std::move(name)), args_(std::move(args)) {}

  bool is_variable_ = true;
  std::string name_;
  std::vector<Term> args_;
};

/// Variables of `t` in first-occurrence (left to right) order.
std::vector<std::string> variables(const Term& t);

/// Canonical prefix rendering: `f(t1,t2)`, nullary symbols bare, no spaces.
std::string render(const Term& t);

/// Checks every application against `sig` (symbol known, arity matches) and
/// that no variable is named like a declared symbol.
void check_term(const Term& t, const Signature& sig);

/// Parses a prefix-application expression. Identifiers that are not declared
/// in `sig` are variables; declared symbols of positive arity must be applied.
Term parse_term(std::string_view text, const Signature& sig);

/// An equation `lhs = rhs` with its variables listed in first-occurrence
/// order across lhs then rhs.
struct Identity {
  Term lhs;
  Term rhs;
  std::vector<std::string> vars;

  friend bool operator==(const Identity&, const Identity&) = default;
};

Identity make_identity(Term lhs, Term rhs);
Identity parse_identity(std::string_view text, const Signature& sig);
std::string render(const Identity& id);

/// Reads the `.ids` format: one `TERM = TERM` per line, `#` comment lines and
/// blank lines ignored. Parse errors carry the 1-based line number.
std::vector<Identity> parse_identities(std::string_view text, const Signature& sig);
std::string render_identities(const std::vector<Identity>& ids);

}  // namespace goursat
