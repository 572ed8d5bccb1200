#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goursat {

struct OpSymbol {
  std::string name;
  unsigned arity = 0;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// Operation symbols with arities, kept in declaration order. The order is
/// significant: operation tables, reports and witness searches follow it.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<OpSymbol> ops);

  void add(std::string name, unsigned arity);

  std::optional<std::size_t> find(std::string_view name) const;
  const OpSymbol& op(std::size_t index) const { return ops_[index]; }
  const std::vector<OpSymbol>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  /// True when every symbol of `other` is declared here with the same arity.
  bool contains(const Signature& other) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.ops_ == b.ops_;
  }

 private:
  std::vector<OpSymbol> ops_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

bool is_identifier(std::string_view text);

}  // namespace goursat
