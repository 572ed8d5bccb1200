// Command-line front end: congruence lattices, permutability, closure
// operators, axiom sweeps, distributivity and term searches on `.alg` files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"
#include "goursat/corpus.hpp"
#include "goursat/distributivity.hpp"
#include "goursat/format.hpp"
#include "goursat/permutability.hpp"
#include "goursat/report.hpp"

namespace {

using namespace goursat;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Usage or input problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string variety;
  std::string rel;
  std::string dot;
  std::string search = "maltsev";
  bool kv = false;
  std::size_t max_size = 64;
  std::size_t clone_cap = 200000;
  std::vector<std::string> corpus_args;
};

FiniteAlgebra load_algebra(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  try {
    return parse_algebra(text);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<FiniteAlgebra> load_algebras(const RunConfig& cfg) {
  std::vector<FiniteAlgebra> algs;
  for (const auto& p : cfg.inputs) algs.push_back(load_algebra(p));
  return algs;
}

SubvarietySpec load_spec(const std::string& path, const FiniteAlgebra& alg) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  try {
    std::string name = path.substr(path.find_last_of('/') + 1);
    if (name.size() > 4 && name.ends_with(".ids")) name.resize(name.size() - 4);
    return parse_spec(name, text, alg.signature());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void check_writable(const std::string& path) {
  std::ofstream probe(path, std::ios::app);
  if (!probe) throw UsageError("cannot write '" + path + "'");
}

void emit(const RunConfig& cfg, const Report& r) { std::cout << (cfg.kv ? r.kv() : r.text()); }

LatticeOptions lattice_options(const RunConfig& cfg) { return LatticeOptions{cfg.max_size}; }

int cmd_con(const RunConfig& cfg) {
  if (!cfg.dot.empty()) check_writable(cfg.dot);
  const FiniteAlgebra alg = load_algebra(cfg.inputs.at(0));
  const CongruenceLattice lat = con_lattice(alg, lattice_options(cfg));
  emit(cfg, lattice_report(alg, lat));
  if (!cfg.dot.empty()) write_file(cfg.dot, lattice_dot(alg, lat));
  return kPass;
}

int cmd_perm(const RunConfig& cfg) {
  const FiniteAlgebra alg = load_algebra(cfg.inputs.at(0));
  const CongruenceLattice lat = con_lattice(alg, lattice_options(cfg));
  Report r;
  r.add("algebra", alg.name());
  r.add("congruences", lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) r.add("con." + std::to_string(i), to_literal(lat[i]));
  bool all_two = true;
  bool all_three = true;
  bool joins_ok = true;
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      const std::string key = "pair." + std::to_string(i) + "." + std::to_string(j);
      const auto level = permutability_level(alg, lat[i], lat[j]);
      r.add(key + ".level", to_string(level));
      all_two = all_two && level == PermutabilityLevel::two;
      all_three = all_three && level != PermutabilityLevel::neither;
      if (level == PermutabilityLevel::neither) continue;
      const auto check = goursat_join_check(alg, lat[i], lat[j]);
      r.add(key + ".rsr_is_join", check.holds);
      joins_ok = joins_ok && check.holds;
    }
  r.add("summary", all_two ? "2-permutable" : all_three ? "3-permutable" : "not 3-permutable");
  const bool pass = all_three && joins_ok;
  r.add("result", pass ? "PASS" : "FAIL");
  emit(cfg, r);
  return pass ? kPass : kFail;
}

int cmd_closure(const RunConfig& cfg) {
  const FiniteAlgebra alg = load_algebra(cfg.inputs.at(0));
  const SubvarietySpec spec = load_spec(cfg.variety, alg);
  std::vector<Partition> targets;
  if (!cfg.rel.empty()) {
    Partition s;
    try {
      s = parse_partition(cfg.rel, alg.size());
    } catch (const Error& e) {
      throw UsageError(std::string("--rel: ") + e.what());
    }
    if (auto v = is_congruence(alg, s); !v.holds)
      throw UsageError("--rel " + to_literal(s) + " is not a congruence: " + v.witness->describe());
    targets.push_back(s);
  } else {
    targets = con_lattice(alg, lattice_options(cfg)).elements();
  }
  const ClosureOperator op(spec);
  Report r;
  r.add("algebra", alg.name());
  r.add("spec", spec.name);
  r.add("identities", spec.identities.size());
  r.add("delta_bar", to_literal(op.delta_bar(alg)));
  bool pass = true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string key = "rel." + std::to_string(i);
    const ClosureResult eff = op.effective(alg, targets[i]);
    r.add(key, to_literal(targets[i]));
    r.add(key + ".effective", to_literal(eff.closure));
    try {
      const ClosureResult gou = op.goursat(alg, targets[i]);
      r.add(key + ".goursat", to_literal(gou.closure));
      const bool agree = gou.closure == eff.closure;
      r.add(key + ".agree", agree);
      pass = pass && agree;
    } catch (const GoursatViolation& e) {
      r.add(key + ".goursat", std::string("not applicable: ") + e.what());
      r.add(key + ".agree", false);
      pass = false;
    }
    r.add(key + ".closed", eff.closed);
    r.add(key + ".dense", eff.dense);
  }
  r.add("result", pass ? "PASS" : "FAIL");
  emit(cfg, r);
  return pass ? kPass : kFail;
}

int cmd_axioms(const RunConfig& cfg) {
  const auto algs = load_algebras(cfg);
  const SubvarietySpec spec = load_spec(cfg.variety, algs.at(0));
  for (const auto& a : algs)
    if (!applicable(spec, a)) throw UsageError("spec '" + spec.name + "' does not apply to '" + a.name() + "'");
  AxiomBounds bounds;
  bounds.max_carrier = cfg.max_size;
  const AxiomReport report = check_axioms(algs, spec, bounds);
  Report r;
  std::string names;
  for (const auto& a : algs) names += (names.empty() ? "" : ",") + a.name();
  r.add("algebras", names);
  r.append("", axiom_report(report));
  emit(cfg, r);
  return report.passed() ? kPass : kFail;
}

int cmd_dist(const RunConfig& cfg) {
  const auto algs = load_algebras(cfg);
  bool pass = true;
  Report r;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const SubvarietySpec spec = cfg.variety.empty() ? corpus_spec("all") : load_spec(cfg.variety, algs[i]);
    const DistReport d = distributivity_report(algs[i], spec, lattice_options(cfg));
    Report one = dist_report(d);
    if (algs.size() == 1) r.append("", one);
    else r.append("algebra." + std::to_string(i) + ".", one);
    pass = pass && d.consistent() && d.lattice_distributive.holds;
  }
  if (algs.size() > 1) r.add("result", pass ? "PASS" : "FAIL");
  emit(cfg, r);
  return pass ? kPass : kFail;
}

int cmd_terms(const RunConfig& cfg) {
  const FiniteAlgebra alg = load_algebra(cfg.inputs.at(0));
  CloneOptions options;
  options.cap = cfg.clone_cap;
  Report r;
  r.add("algebra", alg.name());
  r.add("search", cfg.search);
  r.add("clone_cap", cfg.clone_cap);
  SearchStatus status;
  std::size_t explored;
  if (cfg.search == "maltsev") {
    const auto s = find_maltsev_term(alg, options);
    status = s.status;
    explored = s.explored;
    if (s.p) r.append("p.", witness_report(*s.p, alg.size()));
  } else {
    const auto s = find_hm_terms(alg, options);
    status = s.status;
    explored = s.explored;
    if (s.p) r.append("p.", witness_report(*s.p, alg.size()));
    if (s.q) r.append("q.", witness_report(*s.q, alg.size()));
  }
  r.add("explored", explored);
  switch (status) {
    case SearchStatus::found: r.add("result", "Some"); break;
    case SearchStatus::absent: r.add("result", "None (fixpoint reached)"); break;
    case SearchStatus::inconclusive: r.add("result", "Inconclusive (cap reached)"); break;
  }
  emit(cfg, r);
  return status == SearchStatus::found ? kPass : kFail;
}

int cmd_corpus(const RunConfig& cfg) {
  const auto& args = cfg.corpus_args;
  if (args.empty()) throw UsageError("corpus: expected 'list', 'specs', 'dump NAME FILE' or 'spec NAME FILE'");
  if (args[0] == "list") {
    Report r;
    for (const auto& e : default_corpus()) {
      std::string specs;
      for (const auto& s : e.specs) specs += (specs.empty() ? "" : ",") + s;
      r.add(e.name, "size=" + std::to_string(e.algebra.size()) + " permutability=" +
                        to_string(e.tags.permutability) + " distributive=" + (e.tags.distributive ? "yes" : "no") +
                        (e.tags.note ? " note=" + *e.tags.note : "") + " specs=" + specs);
    }
    emit(cfg, r);
    return kPass;
  }
  if (args[0] == "specs") {
    Report r;
    for (const auto& v : corpus_specs()) {
      std::string ids;
      for (const auto& id : v.identities) ids += (ids.empty() ? "" : "; ") + render(id);
      r.add(v.name, ids.empty() ? std::string("(no identities)") : ids);
    }
    emit(cfg, r);
    return kPass;
  }
  if ((args[0] == "dump" || args[0] == "spec") && args.size() == 3) {
    check_writable(args[2]);
    if (args[0] == "dump") {
      CorpusEntry e = [&] {
        try {
          return builtin_from_string(args[1]);
        } catch (const Error& err) {
          throw UsageError(err.what());
        }
      }();
      write_file(args[2], write_algebra(e.algebra));
    } else {
      SubvarietySpec v = [&] {
        try {
          return corpus_spec(args[1]);
        } catch (const Error& err) {
          throw UsageError(err.what());
        }
      }();
      std::string text = "# " + v.name + "\n" + render_identities(v.identities);
      write_file(args[2], text);
    }
    return kPass;
  }
  throw UsageError("corpus: expected 'list', 'specs', 'dump NAME FILE' or 'spec NAME FILE'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite universal-algebra workbench: congruences, closure operators, permutability"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--kv", cfg.kv, "Machine-readable key=value output");
    sub->add_option("--max-size", cfg.max_size, "Carrier bound for congruence lattice enumeration")
        ->check(CLI::PositiveNumber);
  };

  auto* con = app.add_subcommand("con", "Congruence lattice");
  con->add_option("algebra", cfg.inputs, "Algebra file (.alg)")->required()->expected(1);
  con->add_option("--dot", cfg.dot, "Write the Hasse diagram in DOT format");
  add_common(con);

  auto* perm = app.add_subcommand("perm", "2-/3-permutability of all congruence pairs");
  perm->add_option("algebra", cfg.inputs, "Algebra file (.alg)")->required()->expected(1);
  add_common(perm);

  auto* closure = app.add_subcommand("closure", "Closure of congruences by both constructions");
  closure->add_option("algebra", cfg.inputs, "Algebra file (.alg)")->required()->expected(1);
  closure->add_option("--variety", cfg.variety, "Identities file (.ids)")->required();
  closure->add_option("--rel", cfg.rel, "Partition literal, e.g. \"0 2|1 3\"");
  add_common(closure);

  auto* axioms = app.add_subcommand("axioms", "Closure operator axiom sweep");
  axioms->add_option("algebras", cfg.inputs, "Algebra files (.alg)")->required();
  axioms->add_option("--variety", cfg.variety, "Identities file (.ids)")->required();
  add_common(axioms);

  auto* dist = app.add_subcommand("dist", "Congruence distributivity and axiom (7)");
  dist->add_option("algebras", cfg.inputs, "Algebra files (.alg)")->required();
  dist->add_option("--variety", cfg.variety, "Identities file (.ids); default: no identities");
  add_common(dist);

  auto* terms = app.add_subcommand("terms", "Mal'tsev / Hagemann-Mitschke term search");
  terms->add_option("algebra", cfg.inputs, "Algebra file (.alg)")->required()->expected(1);
  terms->add_option("--search", cfg.search, "maltsev or hm")->check(CLI::IsMember({"maltsev", "hm"}));
  terms->add_option("--clone-cap", cfg.clone_cap, "Maximum number of clone elements")
      ->check(CLI::Range(std::size_t{3}, std::size_t{100000000}));
  add_common(terms);

  auto* corpus = app.add_subcommand("corpus", "Built-in algebras and specs");
  corpus->add_option("args", cfg.corpus_args, "list | specs | dump NAME FILE | spec NAME FILE");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (con->parsed()) return cmd_con(cfg);
    if (perm->parsed()) return cmd_perm(cfg);
    if (closure->parsed()) return cmd_closure(cfg);
    if (axioms->parsed()) return cmd_axioms(cfg);
    if (dist->parsed()) return cmd_dist(cfg);
    if (terms->parsed()) return cmd_terms(cfg);
    if (corpus->parsed()) return cmd_corpus(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << " (raise --max-size to override)\n";
    return kUsage;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
