#include "goursat/report.hpp"

#include <map>
#include <sstream>

namespace goursat {

void Report::add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

void Report::append(const std::string& prefix, const Report& other) {
  for (const auto& [k, v] : other.entries_) add(prefix + k, v);
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

std::string Report::kv() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string tuple_literal(const std::vector<Element>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::string map_literal(const std::vector<Element>& map) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) out += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(map[i]);
  return out;
}

Report lattice_report(const FiniteAlgebra& alg, const CongruenceLattice& lat) {
  Report r;
  r.add("algebra", alg.name());
  r.add("size", alg.size());
  r.add("congruences", lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) r.add("con." + std::to_string(i), to_literal(lat[i]));
  r.add("bottom", lat.bottom());
  r.add("top", lat.top());
  std::string covers;
  for (auto [lo, hi] : lat.covers()) covers += (covers.empty() ? "" : " ") + std::to_string(lo) + "<" + std::to_string(hi);
  r.add("covers", covers.empty() ? std::string("none") : covers);
  r.add("distributive", is_distributive(lat).holds);
  return r;
}

std::string lattice_dot(const FiniteAlgebra& alg, const CongruenceLattice& lat) {
  std::ostringstream out;
  out << "digraph congruences {\n";
  out << "  label=\"Con(" << alg.name() << ")\";\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    out << "  n" << i << " [label=\"" << to_literal(lat[i]) << "\"];\n";
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  const auto ranks = lat.ranks();
  for (std::size_t i = 0; i < lat.size(); ++i) by_rank[ranks[i]].push_back(i);
  for (const auto& [rank, nodes] : by_rank) {
    out << "  { rank=same;";
    for (std::size_t i : nodes) out << " n" << i << ";";
    out << " }\n";
  }
  for (auto [lo, hi] : lat.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Report axiom_report(const AxiomReport& report) {
  Report r;
  r.add("spec", report.spec);
  r.add("bounds.max_carrier", report.bounds.max_carrier);
  r.add("bounds.max_product", report.bounds.max_product);
  r.add("arrows", report.arrows);
  std::string skipped;
  for (const auto& s : report.skipped) skipped += (skipped.empty() ? "" : ",") + s;
  r.add("skipped", skipped.empty() ? std::string("none") : skipped);
  r.add("note", "axiom (3) is checked over all available arrows, not only arrows of the subcategory");
  for (const auto& res : report.results) {
    const std::string key = axiom_key(res.axiom);
    r.add(key + ".label", axiom_label(res.axiom));
    r.add(key + ".status", to_string(res.status));
    r.add(key + ".instances", res.instances);
    if (res.status == AxiomStatus::not_applicable) r.add(key + ".reason", res.reason);
    if (res.witness) {
      const auto& w = *res.witness;
      r.add(key + ".witness.algebra", w.algebra.name());
      if (w.arrow) {
        r.add(key + ".witness.arrow", w.arrow->description);
        r.add(key + ".witness.map", map_literal(w.arrow->map));
      }
      for (std::size_t i = 0; i < w.relations.size(); ++i)
        r.add(key + ".witness.rel" + std::to_string(i), to_literal(w.relations[i]));
      r.add(key + ".witness.detail", w.detail);
    }
  }
  r.add("result", report.passed() ? "PASS" : "FAIL");
  return r;
}

Report dist_report(const DistReport& report) {
  Report r;
  r.add("algebra", report.algebra);
  r.add("spec", report.spec);
  r.add("congruences", report.lattice.size());
  r.add("lattice_distributive", report.lattice_distributive.holds);
  if (const auto& w = report.lattice_distributive.witness) {
    const char* names[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < 3; ++i)
      r.add(std::string("lattice_distributive.witness.") + names[i], to_literal(report.lattice[(*w)[i]]));
    const auto& lat = report.lattice;
    auto [a, b, c] = *w;
    r.add("lattice_distributive.witness.lhs", to_literal(lat[lat.meet(a, lat.join(b, c))]));
    r.add("lattice_distributive.witness.rhs", to_literal(lat[lat.join(lat.meet(a, b), lat.meet(a, c))]));
  }
  auto image = [&r](const std::string& key, const ImageVerdict& v) {
    r.add(key, v.holds);
    if (!v.witness) return;
    r.add(key + ".witness.quotient_kernel", to_literal(v.witness->kernel));
    r.add(key + ".witness.r", to_literal(v.witness->r));
    r.add(key + ".witness.s", to_literal(v.witness->s));
    r.add(key + ".witness.lhs", to_literal(v.witness->lhs));
    r.add(key + ".witness.rhs", to_literal(v.witness->rhs));
  };
  image("image_meet", report.image_meet);
  image("axiom7", report.axiom7);
  r.add("consistent", report.consistent());
  const bool pass = report.consistent() && report.lattice_distributive.holds;
  r.add("result", pass ? "PASS" : "FAIL");
  return r;
}

Report witness_report(const TermWitness& w, std::size_t n) {
  Report r;
  r.add("term", w.term ? render(*w.term) : std::string("(not reconstructed)"));
  std::string table;
  for (std::size_t i = 0; i < w.table.size(); ++i) table += (i ? " " : "") + std::to_string(w.table[i]);
  r.add("table", table);
  r.add("carrier", n);
  return r;
}

}  // namespace goursat
