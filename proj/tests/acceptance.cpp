// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"
#include "goursat/corpus.hpp"
#include "goursat/distributivity.hpp"
#include "goursat/permutability.hpp"
#include "oracles.hpp"
#include "process.hpp"

using namespace goursat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " of " + std::to_string(count_) + " checks failed";
    for (const auto& f : failures_) s += "\n      " + f;
    return s;
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<CorpusEntry> corpus_up_to(std::size_t n) { return oracle::small_corpus(n); }

bool is_group(const CorpusEntry& e) {
  return e.family == "cyclic_group" || e.family == "klein4" || e.family == "sym3";
}

bool is_implication(const CorpusEntry& e) {
  return e.family == "implication_from_boolean" || e.family == "implication_nonzero";
}

bool all_pairs_three_permute(const FiniteAlgebra& alg, const CongruenceLattice& lat) {
  for (const auto& r : lat.elements())
    for (const auto& s : lat.elements())
      if (permutability_level(alg, r, s) == PermutabilityLevel::neither) return false;
  return true;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome axiom_sweep(const std::vector<Axiom>& axioms, double budget, double* elapsed) {
  Check c;
  const auto start = Clock::now();
  for (const auto& e : corpus_up_to(8))
    for (const auto& v : applicable_specs(e.algebra)) {
      const std::array<FiniteAlgebra, 1> algs{e.algebra};
      const AxiomReport report = check_axioms(algs, v);
      for (Axiom a : axioms) {
        const AxiomResult& r = report[a];
        c.expect(r.status == AxiomStatus::pass && r.instances > 0,
                 e.name + " / " + v.name + ": " + axiom_label(a) + " " + to_string(r.status) +
                     (r.witness ? " (" + r.witness->detail + ")" : ""));
      }
    }
  *elapsed = seconds_since(start);
  c.expect(*elapsed < budget, "sweep took " + std::to_string(*elapsed) + " s");
  return {c.ok(), c.summary()};
}

Outcome criterion1() {
  double t = 0;
  auto o = axiom_sweep({Axiom::extensive, Axiom::monotone, Axiom::pullback_inclusion, Axiom::idempotent,
                        Axiom::pullback_equality},
                       60.0, &t);
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << t;
  o.detail = "sweep " + s.str() + " s; " + o.detail;
  return o;
}

Outcome criterion2() {
  double t = 0;
  return axiom_sweep({Axiom::image, Axiom::image_delta, Axiom::additive, Axiom::image_join}, 60.0, &t);
}

Outcome criterion3() {
  Check c;
  std::size_t algebras = 0;
  for (const auto& e : default_corpus()) {
    const auto lat = con_lattice(e.algebra);
    if (!all_pairs_three_permute(e.algebra, lat)) continue;
    ++algebras;
    for (const auto& v : applicable_specs(e.algebra)) {
      const BinRel db = birkhoff_congruence(e.algebra, v).to_relation();
      for (const auto& s : lat.elements()) {
        const std::string where = e.name + " / " + v.name + " / " + to_literal(s);
        const BinRel raw = compose(compose(db, s.to_relation()), db);
        c.expect(raw.is_transitive(), where + ": raw composite not transitive");
        const ClosureResult eff = closure_effective(e.algebra, s, v);
        try {
          const ClosureResult gou = closure_goursat(e.algebra, s, v);
          c.expect(gou.closure == eff.closure, where + ": constructions differ");
          c.expect(raw == eff.closure.to_relation(), where + ": raw composite differs from closure");
        } catch (const GoursatViolation& ex) {
          c.expect(false, where + ": " + ex.what());
        }
      }
    }
  }
  c.expect(algebras == default_corpus().size(), "only " + std::to_string(algebras) + " algebras 3-permutable");
  return {c.ok(), c.summary()};
}

Outcome criterion4() {
  Check c;
  for (const auto& e : default_corpus())
    for (const auto& v : applicable_specs(e.algebra)) {
      const auto r = roundtrip_check(e.algebra, v);
      c.expect(r.holds && r.reflection_closed && r.closures_agree, e.name + " / " + v.name + ": " + r.detail);
    }
  return {c.ok(), c.summary()};
}

Outcome criterion5() {
  Check c;
  for (const auto& e : default_corpus()) {
    if (!is_group(e) && !is_implication(e)) continue;
    const auto lat = con_lattice(e.algebra);
    for (const auto& r : lat.elements())
      for (const auto& s : lat.elements()) {
        const BinRel R = r.to_relation(), S = s.to_relation();
        if (is_group(e))
          c.expect(compose(R, S) == compose(S, R), e.name + ": " + to_literal(r) + " and " + to_literal(s) + " do not permute");
        if (is_implication(e))
          c.expect(compose(compose(R, S), R) == compose(compose(S, R), S),
                   e.name + ": " + to_literal(r) + " and " + to_literal(s) + " not 3-permutable");
      }
  }
  auto timed = [&](const std::string& what, const std::function<bool()>& fn) {
    const auto start = Clock::now();
    const bool ok = fn();
    const double t = seconds_since(start);
    c.expect(ok, what);
    c.expect(t < 10.0, what + " took " + std::to_string(t) + " s");
  };
  const FiniteAlgebra lat2 = builtin("two_elt_lattice").algebra;
  timed("two_elt_lattice Mal'tsev absent", [&] { return find_maltsev_term(lat2).status == SearchStatus::absent; });
  timed("two_elt_lattice HM absent", [&] { return find_hm_terms(lat2).status == SearchStatus::absent; });
  const FiniteAlgebra imp1 = builtin("implication_from_boolean", 1).algebra;
  timed("implication_from_boolean(1) HM found", [&] {
    const auto hm = find_hm_terms(imp1);
    return hm.status == SearchStatus::found && is_hm_pair(2, hm.p->table, hm.q->table);
  });
  const FiniteAlgebra z2 = builtin("cyclic_group", 2).algebra;
  timed("Z2 Mal'tsev witness is x·y⁻¹·z", [&] {
    const auto m = find_maltsev_term(z2);
    if (m.status != SearchStatus::found) return false;
    // x·y⁻¹·z in Z2, computed directly.
    for (Element x = 0; x < 2; ++x)
      for (Element y = 0; y < 2; ++y)
        for (Element z = 0; z < 2; ++z)
          if (m.p->table[(x * 2 + y) * 2 + z] != ((x + (2 - y) % 2 + z) % 2)) return false;
    return m.p->term.has_value();
  });
  for (const auto& e : default_corpus()) {
    const auto& alg = e.algebra;
    timed(e.name + " Mal'tsev search conclusive",
          [&] { return find_maltsev_term(alg).status != SearchStatus::inconclusive; });
    timed(e.name + " HM search conclusive", [&] { return find_hm_terms(alg).status != SearchStatus::inconclusive; });
  }
  return {c.ok(), c.summary()};
}

Outcome criterion6() {
  Check c;
  const SubvarietySpec all = corpus_spec("all");
  for (const auto& e : default_corpus()) {
    const DistReport r = distributivity_report(e.algebra, all);
    c.expect(r.lattice_distributive.holds == r.image_meet.holds && r.image_meet.holds == r.axiom7.holds,
             e.name + ": verdicts disagree");
  }
  const FiniteAlgebra k = builtin("klein4").algebra;
  const DistReport kr = distributivity_report(k, all);
  c.expect(!kr.lattice_distributive.holds && !kr.image_meet.holds && !kr.axiom7.holds, "klein4 passes a verdict");
  const Partition diag = Partition::from_blocks(4, {{0, 3}, {1, 2}});
  const Partition p1 = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  const Partition p2 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  for (const auto* v : {&kr.image_meet, &kr.axiom7}) {
    if (!v->witness) {
      c.expect(false, "klein4 witness missing");
      continue;
    }
    const auto& w = *v->witness;
    c.expect(w.kernel == diag && w.r == p1 && w.s == p2, "klein4 witness is not (diagonal, ker p1, ker p2)");
    c.expect(w.lhs.is_discrete() && w.rhs.is_total(), "klein4 witness sides are not Δ and ∇");
    const QuotientMap f = quotient(k, w.kernel);
    c.expect(direct_image(f, w.r.meet(w.s)).is_discrete(), "klein4 witness does not replay (lhs)");
    c.expect(direct_image(f, w.r).meet(direct_image(f, w.s)).is_total(), "klein4 witness does not replay (rhs)");
  }
  for (const char* name : {"heyting_chain(3)", "cyclic_group(4)"}) {
    const DistReport r = distributivity_report(builtin_from_string(name).algebra, all);
    c.expect(r.lattice_distributive.holds && r.image_meet.holds && r.axiom7.holds, std::string(name) + " fails a verdict");
  }
  return {c.ok(), c.summary()};
}

Outcome criterion7() {
  Check c;
  std::mt19937 rng(20261019);
  for (const auto& e : corpus_up_to(5)) {
    const auto& alg = e.algebra;
    const auto brute = oracle::all_congruences(alg);
    const auto lat = con_lattice(alg);
    c.expect(lat.size() == brute.size(), e.name + ": lattice size differs");
    for (const auto& labels : brute) c.expect(lat.find(Partition(labels)).has_value(), e.name + ": congruence missing");
    for (Element a = 0; a < alg.size(); ++a)
      for (Element b = 0; b < alg.size(); ++b) {
        const std::vector<ElementPair> pair{{a, b}};
        c.expect(oracle::matrix_of(congruence_generated(alg, pair)) == oracle::generated(alg, pair),
                 e.name + ": Cg(" + std::to_string(a) + "," + std::to_string(b) + ") differs");
      }
    for (int i = 0; i < 20; ++i) {
      std::vector<ElementPair> pairs;
      for (std::size_t k = rng() % 4; k > 0; --k)
        pairs.push_back({static_cast<Element>(rng() % alg.size()), static_cast<Element>(rng() % alg.size())});
      c.expect(oracle::matrix_of(congruence_generated(alg, pairs)) == oracle::generated(alg, pairs),
               e.name + ": generated congruence differs");
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const BinRel r = oracle::random_relation(n, rng, density);
    const BinRel s = oracle::random_relation(n, rng, density);
    c.expect(oracle::matrix_of(compose(r, s)) == oracle::compose(oracle::matrix_of(r), oracle::matrix_of(s)),
             "compose differs on n=" + std::to_string(n));
  }
  return {c.ok(), c.summary()};
}

Outcome criterion8() {
  Check c;
  for (const auto& e : default_corpus()) {
    if (!is_group(e)) continue;
    const auto lat = con_lattice(e.algebra);
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const std::string where = e.name + ": " + to_literal(lat[i]) + ", " + to_literal(lat[j]);
        try {
          const Partition got = closure_by_component(lat[i], lat[j], e.algebra);
          c.expect(got == join(e.algebra, lat[i], lat[j]), where);
          c.expect(compose(lat[i].to_relation(), lat[j].to_relation()) == got.to_relation(), where + " (raw)");
        } catch (const Error& ex) {
          c.expect(false, where + ": " + ex.what());
        }
      }
  }
  return {c.ok(), c.summary()};
}

Outcome criterion9() {
  namespace fs = std::filesystem;
  using testing_support::quote;
  using testing_support::run;
  Check c;
  const std::string cli = quote(GOURSAT_CLI);
  const fs::path dir = fs::temp_directory_path() / ("goursat_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  };
  // Runs twice; output (and an optional side file) must be byte-identical.
  auto twice = [&](const std::string& args, int expected, const fs::path& side = {}) {
    std::string first_side;
    const auto a = run(cli + " " + args + " 2>&1");
    if (!side.empty()) first_side = read(side);
    const auto b = run(cli + " " + args + " 2>&1");
    c.expect(a.out == b.out, "output differs: " + args);
    c.expect(a.status == b.status, "status differs: " + args);
    c.expect(a.status == expected,
             "exit " + std::to_string(a.status) + " (expected " + std::to_string(expected) + "): " + args);
    if (!side.empty()) c.expect(!first_side.empty() && first_side == read(side), "file differs: " + args);
  };

  twice("corpus list", 0);
  twice("corpus specs", 0);
  for (const auto& v : corpus_specs()) {
    const fs::path ids = dir / (v.name + ".ids");
    twice("corpus spec " + quote(v.name) + " " + quote(ids.string()), 0, ids);
  }

  for (const auto& e : default_corpus()) {
    const fs::path alg_file = dir / (e.name + ".alg");
    const std::string f = quote(alg_file.string());
    twice("corpus dump " + quote(e.name) + " " + f, 0, alg_file);

    const auto lat = con_lattice(e.algebra);
    const fs::path dot = dir / (e.name + ".dot");
    twice("con " + f + " --dot " + quote(dot.string()), 0, dot);
    twice("con " + f + " --kv", 0);

    bool perm_ok = true;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = i + 1; j < lat.size(); ++j) {
        if (permutability_level(e.algebra, lat[i], lat[j]) == PermutabilityLevel::neither) perm_ok = false;
        else perm_ok = perm_ok && goursat_join_check(e.algebra, lat[i], lat[j]).holds;
      }
    twice("perm " + f, perm_ok ? 0 : 1);

    const DistReport d = distributivity_report(e.algebra, corpus_spec("all"));
    twice("dist " + f, d.consistent() && d.lattice_distributive.holds ? 0 : 1);
    twice("terms " + f + " --search maltsev", find_maltsev_term(e.algebra).status == SearchStatus::found ? 0 : 1);
    twice("terms " + f + " --search hm", find_hm_terms(e.algebra).status == SearchStatus::found ? 0 : 1);

    for (const auto& v : applicable_specs(e.algebra)) {
      const std::string ids = quote((dir / (v.name + ".ids")).string());
      bool agree = true;
      for (const auto& s : lat.elements()) {
        try {
          agree = agree && closure_goursat(e.algebra, s, v).closure == closure_effective(e.algebra, s, v).closure;
        } catch (const GoursatViolation&) {
          agree = false;
        }
      }
      twice("closure " + f + " --variety " + ids, agree ? 0 : 1);
      const std::array<FiniteAlgebra, 1> one{e.algebra};
      if (e.algebra.size() <= 8) twice("axioms " + f + " --variety " + ids, check_axioms(one, v).passed() ? 0 : 1);
    }
  }
  const std::string z4 = quote((dir / "cyclic_group(4).alg").string());
  const std::string exp2 = quote((dir / "exponent-2.ids").string());
  twice("closure " + z4 + " --variety " + exp2 + " --rel '0 2|1 3'", 0);
  twice("closure " + z4 + " --variety " + exp2 + " --rel '0 1|2 3'", 2);
  twice("terms " + quote((dir / "two_elt_lattice.alg").string()) + " --clone-cap 4", 1);
  twice("con " + quote((dir / "missing.alg").string()), 2);
  twice("frobnicate", 2);
  twice("", 2);

  std::error_code ec;
  fs::remove_all(dir, ec);
  return {c.ok(), std::to_string(c.count()) + " checks; " + c.summary()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closure axioms (1)-(5) on corpus algebras of size <= 8, all applicable specs, < 60 s", criterion1},
      {"axioms (6), (6'), additivity and image of joins on the same sweep", criterion2},
      {"closure_effective = closure_goursat with transitive raw composite on 3-permutable corpus", criterion3},
      {"round trip between reflection and closure on every corpus algebra and spec", criterion4},
      {"permutability landscape and term searches, each search < 10 s", criterion5},
      {"distributivity equivalence with klein4 witness; heyting_chain(3), cyclic_group(4) pass", criterion6},
      {"oracle equivalence: Cg and Con for n <= 5, compose on 1000 random pairs n <= 6", criterion7},
      {"closure_by_component(s, r) = join(s, r) on group corpus", criterion8},
      {"CLI determinism and exit codes on the corpus", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    all = all && o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ["
         << t << " s]";
    if (!o.pass) line << "\n      " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
