#include <doctest.h>

#include "goursat/closure.hpp"
#include "goursat/congruence.hpp"
#include "goursat/corpus.hpp"
#include "goursat/distributivity.hpp"
#include "oracles.hpp"

using namespace goursat;

namespace {

Partition blocks(std::size_t n, std::vector<std::vector<Element>> b) { return Partition::from_blocks(n, b); }

// Distributivity decided on brute-force congruence lists, with joins as
// meets of upper bounds.
bool distributive_oracle(const FiniteAlgebra& alg) {
  const auto cons = oracle::all_congruences(alg);
  std::vector<oracle::Matrix> ms;
  for (const auto& c : cons) ms.push_back(oracle::matrix_of(c));
  const std::size_t n = alg.size();
  auto meet = [&](const oracle::Matrix& a, const oracle::Matrix& b) {
    oracle::Matrix out = a;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) out[x][y] = a[x][y] && b[x][y];
    return out;
  };
  auto join = [&](const oracle::Matrix& a, const oracle::Matrix& b) {
    oracle::Matrix out(n, std::vector<bool>(n, true));
    for (const auto& c : ms)
      if (oracle::subset(a, c) && oracle::subset(b, c)) out = meet(out, c);
    return out;
  };
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& c : ms)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

}  // namespace

TEST_CASE("is_distributive examples") {
  CHECK(is_distributive(con_lattice(builtin("cyclic_group", 4).algebra)).holds);
  CHECK(is_distributive(con_lattice(builtin("two_elt_lattice").algebra)).holds);
  const auto lat = con_lattice(builtin("klein4").algebra);
  const auto v = is_distributive(lat);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  const auto [a, b, c] = *v.witness;
  for (std::size_t i : {a, b, c}) CHECK(lat[i].block_count() == 2);
  CHECK(lat.meet(a, lat.join(b, c)) == a);
  CHECK(lat.join(lat.meet(a, b), lat.meet(a, c)) == lat.bottom());
}

TEST_CASE("is_distributive matches the brute-force oracle") {
  for (const auto& e : oracle::small_corpus(5))
    CHECK(is_distributive(con_lattice(e.algebra)).holds == distributive_oracle(e.algebra));
}

TEST_CASE("image_meet_check on Z2xZ2 gives the diagonal witness") {
  const FiniteAlgebra k = builtin("klein4").algebra;
  const auto v = image_meet_check(k);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  CHECK(w.kernel == blocks(4, {{0, 3}, {1, 2}}));
  CHECK(w.r == blocks(4, {{0, 1}, {2, 3}}));
  CHECK(w.s == blocks(4, {{0, 2}, {1, 3}}));
  CHECK(w.lhs.is_discrete());
  CHECK(w.rhs.is_total());
  // Replay through library calls.
  const QuotientMap f = quotient(k, w.kernel);
  CHECK(direct_image(f, w.r.meet(w.s)) == w.lhs);
  CHECK(direct_image(f, w.r).meet(direct_image(f, w.s)) == w.rhs);
  CHECK(image_meet_check(builtin("cyclic_group", 4).algebra).holds);
  CHECK(image_meet_check(builtin("heyting_chain", 3).algebra).holds);
}

TEST_CASE("check_axiom7 examples") {
  const FiniteAlgebra h3 = builtin("heyting_chain", 3).algebra;
  CHECK(check_axiom7(h3, corpus_spec("boolean-from-heyting")).holds);
  const auto k = check_axiom7(builtin("klein4").algebra, corpus_spec("all"));
  CHECK_FALSE(k.holds);
  REQUIRE(k.witness);
  CHECK(k.witness->kernel == blocks(4, {{0, 3}, {1, 2}}));
  CHECK(check_axiom7(builtin("cyclic_group", 1).algebra, corpus_spec("trivial")).holds);
}

TEST_CASE("closure_meet_identity_check") {
  const FiniteAlgebra h3 = builtin("heyting_chain", 3).algebra;
  const auto v = closure_meet_identity_check(h3, corpus_spec("boolean-from-heyting"));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(closure_meet_identity_check(builtin("cyclic_group", 4).algebra, corpus_spec("exponent-2")).holds);
  CHECK_FALSE(closure_meet_identity_check(builtin("klein4").algebra, corpus_spec("all")).applicable);
}

TEST_CASE("the three distributivity verdicts agree on the corpus") {
  for (const auto& e : default_corpus()) {
    const DistReport r = distributivity_report(e.algebra, corpus_spec("all"));
    CHECK(r.consistent());
    CHECK(r.lattice_distributive.holds == r.image_meet.holds);
    CHECK(r.image_meet.holds == r.axiom7.holds);
    CHECK(r.lattice_distributive.holds == e.tags.distributive);
    for (const auto& v : applicable_specs(e.algebra)) {
      const auto m = closure_meet_identity_check(e.algebra, v);
      CHECK(m.applicable == e.tags.distributive);
      if (m.applicable) CHECK(m.holds);
    }
  }
}

TEST_CASE("image-meet witnesses replay") {
  for (const auto& e : oracle::small_corpus(8)) {
    const auto v = image_meet_check(e.algebra);
    if (v.holds) continue;
    const QuotientMap f = quotient(e.algebra, v.witness->kernel);
    CHECK(direct_image(f, v.witness->r.meet(v.witness->s)) != direct_image(f, v.witness->r).meet(direct_image(f, v.witness->s)));
  }
}
