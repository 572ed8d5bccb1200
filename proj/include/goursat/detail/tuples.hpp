#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "goursat/relation.hpp"

namespace goursat::detail {

inline std::size_t power(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Calls fn(args) for every tuple in {0..n-1}^arity, last coordinate fastest.
template <typename Fn>
void for_each_tuple(std::size_t n, unsigned arity, Fn&& fn) {
  std::vector<Element> args(arity, 0);
  const std::size_t total = power(n, arity);
  for (std::size_t idx = 0; idx < total; ++idx) {
    fn(std::span<const Element>(args));
    for (std::size_t k = arity; k-- > 0;) {
      if (++args[k] < n) break;
      args[k] = 0;
    }
  }
}

/// As for_each_tuple, stopping as soon as fn returns false.
template <typename Fn>
void for_each_tuple_while(std::size_t n, unsigned arity, Fn&& fn) {
  if (n == 0 && arity > 0) return;
  std::vector<Element> args(arity, 0);
  while (true) {
    if (!fn(std::span<const Element>(args))) return;
    std::size_t k = arity;
    while (k-- > 0) {
      if (++args[k] < n) break;
      args[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace goursat::detail
