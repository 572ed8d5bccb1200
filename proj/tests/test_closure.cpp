#include <doctest.h>

#include <algorithm>
#include <map>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"
#include "goursat/corpus.hpp"
#include "goursat/error.hpp"
#include "goursat/eval.hpp"
#include "goursat/permutability.hpp"
#include "oracles.hpp"

using namespace goursat;

namespace {

FiniteAlgebra z(unsigned n) { return builtin("cyclic_group", n).algebra; }

Partition blocks(std::size_t n, std::vector<std::vector<Element>> b) { return Partition::from_blocks(n, b); }

// Does alg/θ satisfy every identity of v? Evaluated in alg, compared modulo θ.
bool quotient_satisfies(const FiniteAlgebra& alg, const oracle::Labels& theta, const SubvarietySpec& v) {
  for (const auto& id : v.identities) {
    const std::size_t k = id.vars.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= alg.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::map<std::string, Element> env;
      std::size_t c = code;
      for (std::size_t i = 0; i < k; ++i) env[id.vars[i]] = static_cast<Element>(c % alg.size()), c /= alg.size();
      if (theta[eval_term(alg, id.lhs, env)] != theta[eval_term(alg, id.rhs, env)]) return false;
    }
  }
  return true;
}

// Least congruence containing s whose quotient lies in the subvariety.
oracle::Matrix closure_oracle(const FiniteAlgebra& alg, const Partition& s, const SubvarietySpec& v) {
  const std::size_t n = alg.size();
  oracle::Matrix out(n, std::vector<bool>(n, true));
  const oracle::Matrix sm = oracle::matrix_of(s);
  for (const auto& c : oracle::all_congruences(alg)) {
    const oracle::Matrix cm = oracle::matrix_of(c);
    if (!oracle::subset(sm, cm) || !quotient_satisfies(alg, c, v)) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out[a][b] = out[a][b] && cm[a][b];
  }
  return out;
}

// Named constants only: every equivalence relation is a congruence.
FiniteAlgebra constants(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "f", "g"};
  Signature sig;
  std::vector<std::vector<Element>> tables;
  for (std::size_t i = 0; i < n; ++i) {
    sig.add(names[i], 0);
    tables.push_back({static_cast<Element>(i)});
  }
  return FiniteAlgebra("constants" + std::to_string(n), sig, n, tables);
}

}  // namespace

TEST_CASE("specs are checked against the algebra signature") {
  const SubvarietySpec exp2 = corpus_spec("exponent-2");
  CHECK(applicable(exp2, z(4)));
  CHECK_FALSE(applicable(exp2, builtin("two_elt_lattice").algebra));
  CHECK_THROWS_AS(require_applicable(exp2, builtin("two_elt_lattice").algebra), SignatureError);
  CHECK_THROWS_AS(birkhoff_congruence(builtin("heyting_chain", 2).algebra, exp2), SignatureError);
  const SubvarietySpec parsed = parse_spec("mine", "# c\nm(x,x) = e\n", z(4).signature());
  CHECK(parsed.identities.size() == 1);
  CHECK(parsed.sig.size() == 2);
  CHECK(applicable(parsed, builtin("klein4").algebra));
  CHECK_THROWS_AS(make_spec("bad", Signature{{"m", 2}}, {"m(x) = x"}), ParseError);
}

TEST_CASE("birkhoff_congruence examples") {
  CHECK(birkhoff_congruence(z(4), corpus_spec("exponent-2")) == blocks(4, {{0, 2}, {1, 3}}));
  CHECK(birkhoff_congruence(builtin("klein4").algebra, corpus_spec("exponent-2")).is_discrete());
  CHECK(birkhoff_congruence(builtin("sym3").algebra, corpus_spec("trivial")).is_total());
  CHECK(birkhoff_congruence(z(8), corpus_spec("exponent-2")) == principal_congruence(z(8), 0, 2));
  CHECK(birkhoff_congruence(builtin("sym3").algebra, corpus_spec("all")).is_discrete());
}

TEST_CASE("reflect examples") {
  const QuotientMap r = reflect(z(4), corpus_spec("exponent-2"));
  CHECK(r.target.size() == 2);
  const QuotientMap id = reflect(builtin("klein4").algebra, corpus_spec("exponent-2"));
  CHECK(id.target.size() == 4);

  const FiniteAlgebra s3 = builtin("sym3").algebra;
  const QuotientMap ab = reflect(s3, corpus_spec("abelian-group"));
  CHECK(ab.target.size() == 2);
  // Even permutations are exactly the elements with a·a·a = e.
  std::vector<Element> even, odd;
  for (Element a = 0; a < 6; ++a) {
    const std::array<Element, 2> aa{a, a};
    const std::array<Element, 2> aaa{s3.apply(0, aa), a};
    (s3.apply(0, aaa) == 0 ? even : odd).push_back(a);
  }
  CHECK(even.size() == 3);
  CHECK(ab.kernel == Partition::from_blocks(6, {even, odd}));
}

TEST_CASE("birkhoff_congruence and reflection against the oracle") {
  for (const auto& e : oracle::small_corpus(8))
    for (const auto& v : applicable_specs(e.algebra)) {
      const Partition db = birkhoff_congruence(e.algebra, v);
      CHECK(oracle::matrix_of(db) == closure_oracle(e.algebra, Partition::discrete(e.algebra.size()), v));
      const QuotientMap r = reflect(e.algebra, v);
      for (const auto& id : v.identities) CHECK(satisfies_identity(r.target, id).holds);
      // Universal property: every quotient into the subvariety factors through r.
      const auto lat = con_lattice(e.algebra);
      for (const auto& theta : lat.elements()) {
        const QuotientMap q = quotient(e.algebra, theta);
        bool in_variety = true;
        for (const auto& id : v.identities) in_variety = in_variety && satisfies_identity(q.target, id).holds;
        if (!in_variety) continue;
        CHECK(r.kernel.refines(theta));
        std::vector<Element> factor(r.target.size());
        for (Element a = 0; a < e.algebra.size(); ++a) factor[r.map[a]] = q.map[a];
        CHECK(is_homomorphism(r.target, q.target, factor));
      }
    }
}

TEST_CASE("closure_effective examples") {
  const SubvarietySpec exp2 = corpus_spec("exponent-2");
  const FiniteAlgebra z8 = z(8);
  const ClosureResult d = closure_effective(z8, Partition::discrete(8), exp2);
  CHECK(d.closure == birkhoff_congruence(z8, exp2));
  CHECK(d.delta_bar == d.closure);
  const ClosureResult t = closure_effective(z8, Partition::total(8), exp2);
  CHECK(t.closure.is_total());
  CHECK(t.dense);
  CHECK(t.closed);
  const Partition s = blocks(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const ClosureResult c = closure_effective(z8, s, exp2);
  CHECK(to_literal(c.closure) == "0 2 4 6|1 3 5 7");
  CHECK_FALSE(c.closed);
  CHECK_FALSE(c.dense);
  CHECK(kernel_pair(c.reflection) == c.closure);
  CHECK_THROWS_AS(closure_effective(z(4), blocks(4, {{0, 1}, {2, 3}}), exp2), NotCongruenceError);
}

TEST_CASE("closure_goursat examples") {
  const SubvarietySpec exp2 = corpus_spec("exponent-2");
  const FiniteAlgebra z8 = z(8);
  CHECK(closure_goursat(z8, Partition::discrete(8), exp2).closure == birkhoff_congruence(z8, exp2));
  const Partition s = blocks(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(closure_goursat(z8, s, exp2).closure == closure_effective(z8, s, exp2).closure);
  const FiniteAlgebra h = builtin("heyting_chain", 4).algebra;
  const auto lat = con_lattice(h);
  for (const auto& t : lat.elements()) CHECK(closure_goursat(h, t, corpus_spec("all")).closure == t);
}

TEST_CASE("closure_goursat refuses a non-transitive composite") {
  const FiniteAlgebra a = constants(6);
  const SubvarietySpec v = parse_spec("pairs", "a = b\nc = d\nf = g\n", a.signature());
  CHECK(birkhoff_congruence(a, v) == blocks(6, {{0, 1}, {2, 3}, {4, 5}}));
  const Partition s = blocks(6, {{0}, {1, 2}, {3, 4}, {5}});
  CHECK_THROWS_AS(closure_goursat(a, s, v), GoursatViolation);
  try {
    closure_goursat(a, s, v);
  } catch (const GoursatViolation& e) {
    CHECK_FALSE(e.left().is_transitive());
  }
  CHECK(closure_effective(a, s, v).closure.is_total());
}

TEST_CASE("closures match the least-admissible-congruence oracle") {
  for (const auto& e : oracle::small_corpus(6))
    for (const auto& v : applicable_specs(e.algebra)) {
      const auto lat = con_lattice(e.algebra);
      for (const auto& s : lat.elements()) {
        const ClosureResult r = closure_effective(e.algebra, s, v);
        CHECK(oracle::matrix_of(r.closure) == closure_oracle(e.algebra, s, v));
        CHECK(s.refines(r.closure));
        CHECK(r.closed == (r.closure == s));
        CHECK(r.dense == r.closure.is_total());
      }
    }
}

TEST_CASE("both constructions agree and the raw composite needs no closure") {
  for (const auto& e : oracle::small_corpus(8))
    for (const auto& v : applicable_specs(e.algebra)) {
      const auto lat = con_lattice(e.algebra);
      const Partition db = birkhoff_congruence(e.algebra, v);
      for (const auto& s : lat.elements()) {
        const auto D = oracle::matrix_of(db);
        const auto S = oracle::matrix_of(s);
        const auto dsd = oracle::compose(oracle::compose(D, S), D);
        const auto sds = oracle::compose(oracle::compose(S, D), S);
        const ClosureResult eff = closure_effective(e.algebra, s, v);
        CHECK(dsd == oracle::matrix_of(eff.closure));
        CHECK(sds == dsd);
        CHECK(closure_goursat(e.algebra, s, v).closure == eff.closure);
      }
    }
}

TEST_CASE("closure_by_component") {
  const FiniteAlgebra z8 = z(8);
  const Partition s = principal_congruence(z8, 0, 4);
  const Partition r = principal_congruence(z8, 0, 2);
  CHECK(closure_by_component(s, Partition::discrete(8), z8) == s);
  CHECK(closure_by_component(s, Partition::total(8), z8).is_total());
  CHECK(closure_by_component(s, r, z8) == r);
  const FiniteAlgebra chain = builtin("lattice_chain", 3).algebra;
  CHECK_THROWS_AS(closure_by_component(blocks(3, {{0, 1}, {2}}), blocks(3, {{0}, {1, 2}}), chain),
                  NotPermutableError);
}

TEST_CASE("axiom suite on Z4, Z8, Z2xZ2 with exponent 2") {
  const std::array<FiniteAlgebra, 3> algs{z(4), z(8), builtin("klein4").algebra};
  const AxiomReport report = check_axioms(algs, corpus_spec("exponent-2"));
  CHECK(report.passed());
  for (Axiom a : kAllAxioms) {
    CHECK(report[a].status == AxiomStatus::pass);
    CHECK(report[a].instances > 0);
  }
  CHECK(report.skipped.empty());
}

TEST_CASE("axiom suite with trivial and empty specs") {
  const std::array<FiniteAlgebra, 2> algs{builtin("heyting_chain", 3).algebra, builtin("heyting_chain", 2).algebra};
  for (const char* name : {"trivial", "all"}) {
    const AxiomReport report = check_axioms(algs, corpus_spec(name));
    CHECK(report.passed());
  }
}

TEST_CASE("axiom (7) is not applicable without a distributive lattice") {
  const std::array<FiniteAlgebra, 1> algs{builtin("klein4").algebra};
  const AxiomReport report = check_axioms(algs, corpus_spec("all"));
  CHECK(report[Axiom::intersection].status == AxiomStatus::not_applicable);
  CHECK_FALSE(report[Axiom::intersection].reason.empty());
  CHECK(report.passed());
}

TEST_CASE("carrier bound produces not-applicable, never a silent pass") {
  const std::array<FiniteAlgebra, 2> algs{z(4), z(8)};
  AxiomBounds bounds;
  bounds.max_carrier = 4;
  const AxiomReport report = check_axioms(algs, corpus_spec("exponent-2"), bounds);
  CHECK(report.skipped == std::vector<std::string>{"cyclic_group(8)"});
  for (Axiom a : kAllAxioms) CHECK(report[a].status == AxiomStatus::not_applicable);
}

TEST_CASE("axioms hold on a non-Goursat algebra too") {
  const FiniteAlgebra a = constants(5);
  const SubvarietySpec v = parse_spec("pairs", "a = b\nc = d\n", a.signature());
  const std::array<FiniteAlgebra, 1> algs{a};
  AxiomBounds bounds;
  bounds.products = false;
  const AxiomReport report = check_axioms(algs, v, bounds);
  for (Axiom ax : {Axiom::extensive, Axiom::monotone, Axiom::pullback_inclusion, Axiom::idempotent,
                   Axiom::pullback_equality})
    CHECK(report[ax].status == AxiomStatus::pass);
}

TEST_CASE("round trip between closure and reflection") {
  CHECK(roundtrip_check(z(4), corpus_spec("exponent-2")).holds);
  CHECK(roundtrip_check(z(8), corpus_spec("exponent-2")).holds);
  CHECK(roundtrip_check(builtin("klein4").algebra, corpus_spec("exponent-2")).holds);
  for (const auto& e : oracle::small_corpus(8))
    for (const auto& v : applicable_specs(e.algebra)) {
      const auto verdict = roundtrip_check(e.algebra, v);
      CHECK(verdict.holds);
      CHECK(verdict.reflection_closed);
      CHECK(verdict.closures_agree);
    }
}

TEST_CASE("closure operator caches delta bar per structure") {
  const ClosureOperator op(corpus_spec("exponent-2"));
  const FiniteAlgebra a = z(8);
  const Partition first = op.delta_bar(a);
  CHECK(op.delta_bar(a.renamed("copy")) == first);
  CHECK(op.delta_bar(z(4)) == blocks(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("axiom labels and keys") {
  CHECK(axiom_key(Axiom::image_delta) == "axiom6p");
  CHECK(axiom_key(Axiom::intersection) == "axiom7");
  CHECK(axiom_label(Axiom::extensive) == "(1) extensive");
  CHECK(to_string(AxiomStatus::not_applicable) == "NOT-APPLICABLE");
}
