#pragma once

#include <string>
#include <utility>
#include <vector>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"
#include "goursat/distributivity.hpp"
#include "goursat/permutability.hpp"

namespace goursat {

/// Ordered key/value document. Rendered either as text (`key: value`) or as
/// machine-readable `key=value` lines; both are deterministic.
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void append(const std::string& prefix, const Report& other);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string text() const;
  std::string kv() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string tuple_literal(const std::vector<Element>& t);
std::string map_literal(const std::vector<Element>& map);

Report lattice_report(const FiniteAlgebra& alg, const CongruenceLattice& lat);
/// Hasse diagram; nodes labelled by partition literal, edges from lower to
/// upper cover, same-rank nodes grouped.
std::string lattice_dot(const FiniteAlgebra& alg, const CongruenceLattice& lat);

Report axiom_report(const AxiomReport& report);
Report dist_report(const DistReport& report);
Report witness_report(const TermWitness& w, std::size_t n);

}  // namespace goursat
