#include "goursat/signature.hpp"

#include <cctype>

#include "goursat/error.hpp"

namespace goursat {

Signature::Signature(std::initializer_list<OpSymbol> ops) {
  for (const auto& op : ops) add(op.name, op.arity);
}

void Signature::add(std::string name, unsigned arity) {
  if (!is_identifier(name))
    throw SignatureError("invalid operation symbol '" + name + "'");
  if (index_.count(name) != 0)
    throw SignatureError("duplicate operation symbol '" + name + "'");
  index_.emplace(name, ops_.size());
  ops_.push_back(OpSymbol{std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Signature::contains(const Signature& other) const {
  for (const auto& op : other.ops_) {
    auto idx = find(op.name);
    if (!idx || ops_[*idx].arity != op.arity) return false;
  }
  return true;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : text.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_' && u != '\'') return false;
  }
  return true;
}

}  // namespace goursat
