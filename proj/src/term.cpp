#include "goursat/term.hpp"

#include <algorithm>
#include <cctype>

#include "goursat/error.hpp"

namespace goursat {

Term Term::variable(std::string name) { return Term(true, std::move(name), {}); }

Term Term::apply(std::string symbol, std::vector<Term> args) {
  return Term(false, std::move(symbol), std::move(args));
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

namespace {

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_variables(a, out);
}

void render_into(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_variable() || t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ',';
    render_into(t.args()[i], out);
  }
  out += ')';
}

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse_all() {
    Term t = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

  /// Parses one term and stops, leaving the cursor after it.
  Term parse() {
    skip_space();
    std::size_t start = pos_;
    std::string name = identifier();
    skip_space();
    bool has_parens = pos_ < text_.size() && text_[pos_] == '(';
    auto op = sig_.find(name);
    if (!op) {
      if (has_parens) fail_at(start, "unknown operation symbol '" + name + "'");
      return Term::variable(std::move(name));
    }
    unsigned arity = sig_.op(*op).arity;
    if (!has_parens) {
      if (arity != 0)
        fail_at(start, "symbol '" + name + "' has arity " + std::to_string(arity) +
                           " but is used without arguments");
      return Term::apply(std::move(name));
    }
    ++pos_;
    std::vector<Term> args;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
    } else {
      while (true) {
        args.push_back(parse());
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == ')') break;
        if (c != ',') fail_at(pos_ - 1, "expected ',' or ')'");
      }
    }
    if (args.size() != arity) {
      if (arity == 0)
        fail_at(start, "nullary symbol '" + name + "' applied to arguments");
      fail_at(start, "symbol '" + name + "' expects " + std::to_string(arity) +
                         " arguments, got " + std::to_string(args.size()));
    }
    return Term::apply(std::move(name), std::move(args));
  }

  std::size_t position() const { return pos_; }

 private:
  std::string identifier() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t start = pos_;
    auto ok = [&](std::size_t i, bool head) {
      auto c = static_cast<unsigned char>(text_[i]);
      return std::isalpha(c) || c == '_' || (!head && (std::isdigit(c) || c == '\''));
    };
    if (!ok(pos_, true)) fail("expected identifier");
    ++pos_;
    while (pos_ < text_.size() && ok(pos_, false)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    if (at >= text_.size() && msg.rfind("unexpected end", 0) != 0)
      throw ParseError(msg + " at end of input", 0, at + 1);
    throw ParseError(msg, 0, at + 1);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

Term parse_term_plain(std::string_view text, const Signature& sig) { return TermParser(text, sig).parse_all(); }

// Columns refer to `text`.
Identity parse_identity_plain(std::string_view text, const Signature& sig) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected 'TERM = TERM'", 0, text.size() + 1);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '='", 0, text.find('=', eq + 1) + 1);
  Term lhs = parse_term_plain(text.substr(0, eq), sig);
  Term rhs = [&] {
    try {
      return parse_term_plain(text.substr(eq + 1), sig);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, e.column() + eq + 1);
    }
  }();
  return make_identity(std::move(lhs), std::move(rhs));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

void check_term(const Term& t, const Signature& sig) {
  auto op = sig.find(t.name());
  if (t.is_variable()) {
    if (op) throw SignatureError("variable '" + t.name() + "' collides with an operation symbol");
    return;
  }
  if (!op) throw SignatureError("unknown operation symbol '" + t.name() + "'");
  if (sig.op(*op).arity != t.args().size())
    throw SignatureError("arity mismatch for '" + t.name() + "'");
  for (const auto& a : t.args()) check_term(a, sig);
}

Term parse_term(std::string_view text, const Signature& sig) {
  try {
    return parse_term_plain(text, sig);
  } catch (const ParseError& e) {
    throw ParseError("column " + std::to_string(e.column()) + ": " + e.what(), 0, e.column());
  }
}

Identity make_identity(Term lhs, Term rhs) {
  Identity id{std::move(lhs), std::move(rhs), {}};
  collect_variables(id.lhs, id.vars);
  collect_variables(id.rhs, id.vars);
  return id;
}

Identity parse_identity(std::string_view text, const Signature& sig) {
  try {
    return parse_identity_plain(text, sig);
  } catch (const ParseError& e) {
    throw ParseError("column " + std::to_string(e.column()) + ": " + e.what(), 0, e.column());
  }
}

std::string render(const Identity& id) { return render(id.lhs) + " = " + render(id.rhs); }

std::vector<Identity> parse_identities(std::string_view text, const Signature& sig) {
  std::vector<Identity> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view raw = text.substr(start, end - start);
    const std::string line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_identity_plain(raw, sig));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(e.column()) + ": " +
                             e.what(),
                         line_no, e.column());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string render_identities(const std::vector<Identity>& ids) {
  std::string out;
  for (const auto& id : ids) out += render(id) + "\n";
  return out;
}

}  // namespace goursat
