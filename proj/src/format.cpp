#include "goursat/format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "goursat/detail/tuples.hpp"
#include "goursat/error.hpp"

namespace goursat {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
      out.push_back(Token{std::string(text.substr(start, i - start)), line});
    }
  }
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t line() const {
    if (tokens_.empty()) return 1;
    return done() ? tokens_.back().line : tokens_[pos_].line;
  }

  const Token& next(const char* what) {
    if (done()) fail(std::string("unexpected end of file, expected ") + what);
    return tokens_[pos_++];
  }

  void keyword(const char* kw) {
    const Token& t = next(kw);
    if (t.text != kw) fail_at(t.line, std::string("expected '") + kw + "', got '" + t.text + "'");
  }

  std::size_t number(const char* what) {
    const Token& t = next(what);
    std::size_t value = 0;
    if (t.text.empty()) fail_at(t.line, std::string("expected ") + what);
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail_at(t.line, std::string("expected ") + what + ", got '" + t.text + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
      if (value > (std::size_t{1} << 40)) fail_at(t.line, std::string(what) + " is too large");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(line(), msg); }
  [[noreturn]] static void fail_at(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line, 0);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  TokenStream in(tokenize(text));
  in.keyword("algebra");
  std::string name = in.next("algebra name").text;
  in.keyword("size");
  const std::size_t line_of_size = in.line();
  const std::size_t n = in.number("carrier size");
  if (n == 0) TokenStream::fail_at(line_of_size, "carrier size must be at least 1");
  Signature sig;
  std::vector<std::vector<Element>> tables;
  while (!in.done()) {
    in.keyword("op");
    const std::size_t op_line = in.line();
    std::string symbol = in.next("operation symbol").text;
    const std::size_t arity = in.number("arity");
    if (arity > 16) TokenStream::fail_at(op_line, "arity " + std::to_string(arity) + " is too large");
    try {
      sig.add(symbol, static_cast<unsigned>(arity));
    } catch (const SignatureError& e) {
      TokenStream::fail_at(op_line, e.what());
    }
    const std::size_t entries = detail::power(n, static_cast<unsigned>(arity));
    if (entries > (std::size_t{1} << 26))
      TokenStream::fail_at(op_line, "table for '" + symbol + "' is too large");
    std::vector<Element> table;
    table.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      const std::size_t entry_line = in.line();
      const std::size_t v = in.number("table entry");
      if (v >= n)
        TokenStream::fail_at(entry_line, "table entry " + std::to_string(v) + " for '" + symbol +
                                             "' is outside 0.." + std::to_string(n - 1));
      table.push_back(static_cast<Element>(v));
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(std::move(name), std::move(sig), n, std::move(tables));
}

std::string write_algebra(const FiniteAlgebra& alg) {
  std::ostringstream out;
  std::string name = alg.name();
  for (char& c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  out << "algebra " << name << "\n";
  out << "size " << alg.size() << "\n";
  const Signature& sig = alg.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    out << "op " << sig.op(op).name << " " << sig.op(op).arity << "\n";
    auto table = alg.table(op);
    const std::size_t row = sig.op(op).arity == 0 ? 1 : alg.size();
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << table[i] << ((i + 1) % row == 0 ? "\n" : " ");
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace goursat
