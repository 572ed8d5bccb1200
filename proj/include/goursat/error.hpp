#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goursat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based (0 when the input is a single
/// line), `column` is a 0-based byte offset into that line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard (carrier size, product size) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace goursat
