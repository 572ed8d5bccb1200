#include "goursat/closure.hpp"

#include <array>
#include <set>

#include "goursat/congruence.hpp"
#include "goursat/distributivity.hpp"
#include "goursat/eval.hpp"
#include "goursat/permutability.hpp"
#include "goursat/detail/tuples.hpp"

namespace goursat {

namespace {

void collect_symbols(const Term& t, const Signature& from, Signature& into) {
  if (t.is_variable()) return;
  if (!into.find(t.name())) {
    auto op = from.find(t.name());
    into.add(t.name(), op ? from.op(*op).arity : static_cast<unsigned>(t.args().size()));
  }
  for (const auto& a : t.args()) collect_symbols(a, from, into);
}

Signature symbols_of(const std::vector<Identity>& ids, const Signature& from) {
  Signature sig;
  for (const auto& id : ids) {
    collect_symbols(id.lhs, from, sig);
    collect_symbols(id.rhs, from, sig);
  }
  return sig;
}

}  // namespace

SubvarietySpec make_spec(std::string name, Signature sig, const std::vector<std::string>& identities) {
  SubvarietySpec v{std::move(name), std::move(sig), {}};
  for (const auto& text : identities) v.identities.push_back(parse_identity(text, v.sig));
  return v;
}

SubvarietySpec parse_spec(std::string name, std::string_view ids_text, const Signature& sig) {
  auto ids = parse_identities(ids_text, sig);
  Signature used = symbols_of(ids, sig);
  return SubvarietySpec{std::move(name), std::move(used), std::move(ids)};
}

bool applicable(const SubvarietySpec& v, const FiniteAlgebra& alg) {
  return alg.signature().contains(v.sig);
}

void require_applicable(const SubvarietySpec& v, const FiniteAlgebra& alg) {
  if (!applicable(v, alg))
    throw SignatureError("spec '" + v.name + "' uses symbols not in the signature of '" + alg.name() + "'");
}

Partition birkhoff_congruence(const FiniteAlgebra& alg, const SubvarietySpec& v) {
  require_applicable(v, alg);
  Partition theta = Partition::discrete(alg.size());
  // Seed from identity violations in the current quotient until none remain.
  while (true) {
    QuotientMap q = quotient(alg, theta);
    auto blocks = theta.blocks();
    std::vector<ElementPair> pairs;
    for (const auto& id : v.identities) {
      TermEvaluator lhs(q.target, id.lhs, id.vars);
      TermEvaluator rhs(q.target, id.rhs, id.vars);
      detail::for_each_tuple(q.target.size(), static_cast<unsigned>(id.vars.size()),
                             [&](std::span<const Element> a) {
                               const Element l = lhs(a), r = rhs(a);
                               if (l != r) pairs.emplace_back(blocks[l].front(), blocks[r].front());
                             });
    }
    if (pairs.empty()) return theta;
    for (const auto& block : blocks)
      for (std::size_t i = 1; i < block.size(); ++i) pairs.emplace_back(block.front(), block[i]);
    theta = congruence_generated(alg, pairs);
  }
}

QuotientMap reflect(const FiniteAlgebra& alg, const SubvarietySpec& v) {
  return quotient(alg, birkhoff_congruence(alg, v));
}

ClosureOperator::ClosureOperator(SubvarietySpec v) : spec_(std::move(v)) {}

Partition ClosureOperator::delta_bar(const FiniteAlgebra& alg) const {
  const std::size_t key = alg.structural_hash();
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end())
      for (const auto& [cached, theta] : it->second)
        if (cached.same_structure(alg)) return theta;
  }
  Partition theta = birkhoff_congruence(alg, spec_);
  std::lock_guard lock(mutex_);
  cache_[key].emplace_back(alg, theta);
  return theta;
}

ClosureResult ClosureOperator::finish(const FiniteAlgebra& alg, const Partition& s, Partition closure,
                                      Partition delta_bar) const {
  ClosureResult r{s, closure, std::move(delta_bar), quotient(alg, closure), false, false};
  r.closed = closure == s;
  r.dense = closure.is_total();
  return r;
}

ClosureResult ClosureOperator::effective(const FiniteAlgebra& alg, const Partition& s) const {
  require_applicable(spec_, alg);
  QuotientMap q = quotient(alg, s);
  Partition on_quotient = delta_bar(q.target);
  return finish(alg, s, inverse_image(q, on_quotient), delta_bar(alg));
}

ClosureResult ClosureOperator::goursat(const FiniteAlgebra& alg, const Partition& s) const {
  require_applicable(spec_, alg);
  require_congruence(alg, s);
  Partition db = delta_bar(alg);
  const BinRel D = db.to_relation();
  const BinRel S = s.to_relation();
  BinRel left = compose(compose(D, S), D);
  BinRel right = compose(compose(S, D), S);
  if (!left.is_equivalence())
    throw GoursatViolation("Δ̄∘S∘Δ̄ is not an equivalence relation on '" + alg.name() +
                               "' for S = " + to_literal(s),
                           std::move(left), std::move(right));
  if (!(left == right))
    throw GoursatViolation("Δ̄∘S∘Δ̄ differs from S∘Δ̄∘S on '" + alg.name() + "' for S = " + to_literal(s),
                           std::move(left), std::move(right));
  return finish(alg, s, equivalence_closure(left), std::move(db));
}

ClosureResult closure_effective(const FiniteAlgebra& alg, const Partition& s, const SubvarietySpec& v) {
  return ClosureOperator(v).effective(alg, s);
}

ClosureResult closure_goursat(const FiniteAlgebra& alg, const Partition& s, const SubvarietySpec& v) {
  return ClosureOperator(v).goursat(alg, s);
}

Partition closure_by_component(const Partition& s, const Partition& r_comp, const FiniteAlgebra& alg) {
  if (permutability_level(alg, s, r_comp) != PermutabilityLevel::two)
    throw NotPermutableError("congruences " + to_literal(s) + " and " + to_literal(r_comp) + " of '" +
                             alg.name() + "' do not permute");
  const BinRel composite = compose(s.to_relation(), r_comp.to_relation());
  Partition joined = join(alg, s, r_comp);
  if (!(composite == joined.to_relation()))
    throw Error("s∘r differs from the join of permuting congruences on '" + alg.name() + "'");
  return joined;
}

std::string axiom_label(Axiom a) {
  switch (a) {
    case Axiom::extensive: return "(1) extensive";
    case Axiom::monotone: return "(2) monotone";
    case Axiom::pullback_inclusion: return "(3) pullback inclusion";
    case Axiom::idempotent: return "(4) idempotent";
    case Axiom::pullback_equality: return "(5) pullback along regular epis";
    case Axiom::image: return "(6) image of closure";
    case Axiom::image_delta: return "(6') image of closed diagonal";
    case Axiom::additive: return "additive on joins";
    case Axiom::image_join: return "image preserves joins";
    case Axiom::intersection: return "(7) image of closed meet";
  }
  return "?";
}

std::string axiom_key(Axiom a) {
  switch (a) {
    case Axiom::extensive: return "axiom1";
    case Axiom::monotone: return "axiom2";
    case Axiom::pullback_inclusion: return "axiom3";
    case Axiom::idempotent: return "axiom4";
    case Axiom::pullback_equality: return "axiom5";
    case Axiom::image: return "axiom6";
    case Axiom::image_delta: return "axiom6p";
    case Axiom::additive: return "additive";
    case Axiom::image_join: return "image_join";
    case Axiom::intersection: return "axiom7";
  }
  return "?";
}

std::string to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::pass: return "PASS";
    case AxiomStatus::fail: return "FAIL";
    case AxiomStatus::not_applicable: return "NOT-APPLICABLE";
  }
  return "?";
}

const AxiomResult& AxiomReport::operator[](Axiom a) const {
  for (const auto& r : results)
    if (r.axiom == a) return r;
  throw Error("axiom missing from report");
}

bool AxiomReport::passed() const {
  for (const auto& r : results)
    if (r.status == AxiomStatus::fail) return false;
  return true;
}

namespace {

class AxiomSweep {
 public:
  AxiomSweep() {
    for (Axiom a : kAllAxioms) {
      AxiomResult r;
      r.axiom = a;
      results_.push_back(std::move(r));
    }
  }

  AxiomResult& at(Axiom a) { return results_[static_cast<std::size_t>(a)]; }

  /// Counts one instance; `witness` is only invoked for the first failure.
  template <typename WitnessFn>
  void record(Axiom a, bool ok, WitnessFn&& witness) {
    AxiomResult& r = at(a);
    ++r.instances;
    if (ok || r.status == AxiomStatus::fail) return;
    r.status = AxiomStatus::fail;
    r.witness = witness();
  }

  std::vector<AxiomResult> take() && { return std::move(results_); }

 private:
  std::vector<AxiomResult> results_;
};

struct LatticeWithClosures {
  CongruenceLattice lattice;
  std::vector<Partition> closures;
};

LatticeWithClosures close_lattice(const FiniteAlgebra& alg, const ClosureOperator& op,
                                  const LatticeOptions& options) {
  CongruenceLattice lattice = con_lattice(alg, options);
  std::vector<Partition> closures;
  for (const auto& s : lattice.elements()) closures.push_back(op.closure(alg, s));
  return {std::move(lattice), std::move(closures)};
}

// Axiom (3), and (5) when f is surjective, for f: source -> target over all
// congruences of the target.
void check_pullbacks(AxiomSweep& sweep, const ClosureOperator& op, const Homomorphism& f,
                     const LatticeWithClosures& target, bool surjective) {
  for (std::size_t k = 0; k < target.lattice.size(); ++k) {
    const Partition& s = target.lattice[k];
    const Partition pulled = inverse_image(f, s);
    const Partition closed_pulled = op.closure(f.source, pulled);
    const Partition pulled_closure = inverse_image(f, target.closures[k]);
    auto witness = [&] {
      return AxiomWitness{f.target, f, {s}, "closure of f^-1(S) = " + to_literal(closed_pulled) +
                                                ", f^-1(closure of S) = " + to_literal(pulled_closure)};
    };
    sweep.record(Axiom::pullback_inclusion, closed_pulled.refines(pulled_closure), witness);
    if (surjective) sweep.record(Axiom::pullback_equality, closed_pulled == pulled_closure, witness);
  }
}

}  // namespace

AxiomReport check_axioms(std::span<const FiniteAlgebra> algs, const SubvarietySpec& v,
                         const AxiomBounds& bounds) {
  for (const auto& alg : algs) require_applicable(v, alg);
  const ClosureOperator op(v);
  const LatticeOptions lattice_options{bounds.max_carrier};
  AxiomSweep sweep;
  AxiomReport report;
  report.spec = v.name;
  report.bounds = bounds;
  bool any_distributive = false;

  std::vector<std::optional<LatticeWithClosures>> lattices;
  for (const auto& alg : algs) {
    if (alg.size() > bounds.max_carrier) {
      report.skipped.push_back(alg.name());
      lattices.emplace_back();
      continue;
    }
    lattices.emplace_back(close_lattice(alg, op, lattice_options));
  }

  for (std::size_t ai = 0; ai < algs.size(); ++ai) {
    if (!lattices[ai]) continue;
    const FiniteAlgebra& alg = algs[ai];
    const auto& [lat, cl] = *lattices[ai];
    const std::size_t m = lat.size();
    const Partition& delta_bar = cl[lat.bottom()];

    for (std::size_t i = 0; i < m; ++i) {
      sweep.record(Axiom::extensive, lat[i].refines(cl[i]), [&] {
        return AxiomWitness{alg, std::nullopt, {lat[i]}, "closure = " + to_literal(cl[i])};
      });
      const Partition twice = op.closure(alg, cl[i]);
      sweep.record(Axiom::idempotent, twice == cl[i], [&] {
        return AxiomWitness{alg, std::nullopt, {lat[i]},
                            "closure = " + to_literal(cl[i]) + ", closure of closure = " + to_literal(twice)};
      });
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!lat.leq(i, j)) continue;
        sweep.record(Axiom::monotone, cl[i].refines(cl[j]), [&] {
          return AxiomWitness{alg, std::nullopt, {lat[i], lat[j]},
                              "closures " + to_literal(cl[i]) + " and " + to_literal(cl[j])};
        });
      }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Partition lhs = op.closure(alg, lat[lat.join(i, j)]);
        const Partition rhs = join(alg, cl[i], cl[j]);
        sweep.record(Axiom::additive, lhs == rhs, [&] {
          return AxiomWitness{alg, std::nullopt, {lat[i], lat[j]},
                              "closure of join = " + to_literal(lhs) + ", join of closures = " + to_literal(rhs)};
        });
      }

    const bool distributive = is_distributive(lat).holds;
    any_distributive = any_distributive || distributive;

    for (std::size_t t = 0; t < m; ++t) {
      const QuotientMap q = quotient(alg, lat[t]);
      const Homomorphism f = q.as_homomorphism();
      ++report.arrows;
      const LatticeWithClosures target = close_lattice(q.target, op, lattice_options);
      check_pullbacks(sweep, op, f, target, true);

      const Partition image_db = direct_image(q, delta_bar);
      const Partition target_db = target.closures[target.lattice.bottom()];
      sweep.record(Axiom::image_delta, image_db == target_db, [&] {
        return AxiomWitness{alg, f, {}, "f(Δ̄) = " + to_literal(image_db) + ", Δ̄ of target = " + to_literal(target_db)};
      });

      std::vector<Partition> images;
      for (std::size_t i = 0; i < m; ++i) images.push_back(direct_image(q, lat[i]));
      for (std::size_t i = 0; i < m; ++i) {
        const Partition lhs = op.closure(q.target, images[i]);
        const Partition rhs = direct_image(q, cl[i]);
        sweep.record(Axiom::image, lhs == rhs, [&] {
          return AxiomWitness{alg, f, {lat[i]}, "closure of f(S) = " + to_literal(lhs) + ", f(closure of S) = " + to_literal(rhs)};
        });
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Partition lhs = images[lat.join(i, j)];
          const Partition rhs = join(q.target, images[i], images[j]);
          sweep.record(Axiom::image_join, lhs == rhs, [&] {
            return AxiomWitness{alg, f, {lat[i], lat[j]}, "f(R∨S) = " + to_literal(lhs) + ", f(R)∨f(S) = " + to_literal(rhs)};
          });
          if (!distributive) continue;
          const Partition left = direct_image(q, cl[lat.meet(i, j)]);
          const Partition right = op.closure(q.target, images[i]).meet(op.closure(q.target, images[j]));
          sweep.record(Axiom::intersection, left == right, [&] {
            return AxiomWitness{alg, f, {lat[i], lat[j]},
                                "f(closure of R∧S) = " + to_literal(left) +
                                    ", closure of f(R) ∧ closure of f(S) = " + to_literal(right)};
          });
        }
    }

    if (bounds.subalgebras) {
      std::set<std::set<Element>> seen;
      std::vector<std::set<Element>> seeds{{}};
      for (Element a = 0; a < alg.size(); ++a) seeds.push_back({a});
      for (const auto& seed : seeds) {
        auto sub = generate_subuniverse(alg, seed);
        if (sub.empty() || sub.size() == alg.size() || !seen.insert(sub).second) continue;
        const Homomorphism inc = subalgebra_inclusion(alg, sub);
        ++report.arrows;
        check_pullbacks(sweep, op, inc, *lattices[ai], false);
      }
    }
  }

  if (bounds.products) {
    for (std::size_t i = 0; i < algs.size(); ++i)
      for (std::size_t j = i; j < algs.size(); ++j) {
        if (!lattices[i] || !lattices[j]) continue;
        if (!(algs[i].signature() == algs[j].signature())) continue;
        if (algs[i].size() * algs[j].size() > bounds.max_product) continue;
        const std::array<FiniteAlgebra, 2> factors{algs[i], algs[j]};
        for (std::size_t k = 0; k < 2; ++k) {
          const Homomorphism p = projection(factors, k);
          ++report.arrows;
          check_pullbacks(sweep, op, p, *lattices[k == 0 ? i : j], true);
        }
      }
  }

  report.results = std::move(sweep).take();
  for (auto& r : report.results) {
    if (r.status == AxiomStatus::fail) continue;
    if (r.axiom == Axiom::intersection && !any_distributive) {
      r.status = AxiomStatus::not_applicable;
      r.reason = "no input algebra has a distributive congruence lattice";
    } else if (!report.skipped.empty()) {
      r.status = AxiomStatus::not_applicable;
      r.reason = "carrier bound " + std::to_string(bounds.max_carrier) + " exceeded";
    }
  }
  return report;
}

RoundTripVerdict roundtrip_check(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                 const LatticeOptions& options) {
  const ClosureOperator op(v);
  RoundTripVerdict verdict;
  const QuotientMap eta = quotient(alg, op.delta_bar(alg));
  const Partition diag = Partition::discrete(eta.target.size());
  if (!(op.closure(eta.target, diag) == diag)) {
    verdict.holds = verdict.reflection_closed = false;
    verdict.detail = "Δ on " + eta.target.name() + " is not closed";
  }
  // Membership predicate of the induced subcategory: Δ closed.
  auto in_subcategory = [&](const FiniteAlgebra& y) {
    const Partition d = Partition::discrete(y.size());
    return op.closure(y, d) == d;
  };
  const CongruenceLattice lattice = con_lattice(alg, options);
  for (const auto& s : lattice.elements()) {
    const QuotientMap q = quotient(alg, s);
    const CongruenceLattice target = con_lattice(q.target, options);
    // Least congruence of X/S whose quotient lies in the subcategory.
    std::optional<Partition> least;
    std::vector<Partition> admissible;
    for (const auto& theta : target.elements())
      if (in_subcategory(quotient(q.target, theta).target)) admissible.push_back(theta);
    for (const auto& theta : admissible) {
      bool below_all = true;
      for (const auto& other : admissible) below_all = below_all && theta.refines(other);
      if (below_all) least = theta;
    }
    const Partition direct = op.closure(alg, s);
    if (!least || !(inverse_image(q, *least) == direct)) {
      verdict.holds = verdict.closures_agree = false;
      verdict.mismatch = s;
      verdict.detail = least ? "subcategory-derived closure " + to_literal(inverse_image(q, *least)) +
                                   " differs from " + to_literal(direct)
                             : "no least admissible congruence on " + q.target.name();
      break;
    }
  }
  return verdict;
}

}  // namespace goursat
