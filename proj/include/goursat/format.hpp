#pragma once

#include <string>
#include <string_view>

#include "goursat/algebra.hpp"

namespace goursat {

/// Reads the `.alg` format:
///
///   algebra NAME
///   size N
///   op SYMBOL ARITY
///   <N^ARITY table entries, row-major, last argument fastest>
///
/// Table entries are whitespace separated and may span lines. `#` starts a
/// comment running to the end of the line. Errors carry the line number.
FiniteAlgebra parse_algebra(std::string_view text);

/// Writes `.alg` text, one table row (last argument ranging) per line.
std::string write_algebra(const FiniteAlgebra& alg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace goursat
