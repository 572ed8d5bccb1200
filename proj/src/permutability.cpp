#include "goursat/permutability.hpp"

#include <map>

#include "goursat/congruence.hpp"
#include "goursat/detail/tuples.hpp"

namespace goursat {

namespace {

constexpr std::size_t kProjection = static_cast<std::size_t>(-1);

std::vector<std::string> projection_names(const Signature& sig) {
  const std::vector<std::vector<std::string>> candidates{{"x", "y", "z"}, {"u", "v", "w"}};
  for (const auto& names : candidates) {
    bool free = true;
    for (const auto& v : names) free = free && !sig.find(v);
    if (free) return names;
  }
  for (std::size_t suffix = 0;; ++suffix) {
    std::vector<std::string> names{"x_" + std::to_string(suffix), "y_" + std::to_string(suffix),
                                   "z_" + std::to_string(suffix)};
    bool free = true;
    for (const auto& v : names) free = free && !sig.find(v);
    if (free) return names;
  }
}

std::size_t at(std::size_t n, Element a, Element b, Element c) { return (a * n + b) * n + c; }

// Binary key of a ternary table restricted to the pattern (a, a, b) or (a, b, b).
std::vector<Element> restrict_xxy(std::size_t n, const std::vector<Element>& t) {
  std::vector<Element> out(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out[a * n + b] = t[at(n, a, a, b)];
  return out;
}

std::vector<Element> restrict_xyy(std::size_t n, const std::vector<Element>& t) {
  std::vector<Element> out(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out[a * n + b] = t[at(n, a, b, b)];
  return out;
}

bool satisfies_p_xyy(std::size_t n, const std::vector<Element>& p) {
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p[at(n, a, b, b)] != a) return false;
  return true;
}

bool satisfies_q_xxy(std::size_t n, const std::vector<Element>& q) {
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (q[at(n, a, a, b)] != b) return false;
  return true;
}

}  // namespace

std::string to_string(PermutabilityLevel level) {
  switch (level) {
    case PermutabilityLevel::two: return "two";
    case PermutabilityLevel::three: return "three";
    case PermutabilityLevel::neither: return "neither";
  }
  return "?";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

PermutabilityLevel permutability_level(const FiniteAlgebra& alg, const Partition& r, const Partition& s) {
  require_congruence(alg, r);
  require_congruence(alg, s);
  const BinRel R = r.to_relation();
  const BinRel S = s.to_relation();
  const BinRel rs = compose(R, S);
  const BinRel sr = compose(S, R);
  if (rs == sr) return PermutabilityLevel::two;
  if (compose(rs, R) == compose(sr, S)) return PermutabilityLevel::three;
  return PermutabilityLevel::neither;
}

GoursatJoinVerdict goursat_join_check(const FiniteAlgebra& alg, const Partition& r, const Partition& s) {
  GoursatJoinVerdict v;
  v.level = permutability_level(alg, r, s);
  if (v.level == PermutabilityLevel::neither)
    throw NotPermutableError("congruences " + to_literal(r) + " and " + to_literal(s) + " of '" +
                             alg.name() + "' are not 3-permutable");
  const BinRel R = r.to_relation();
  v.composite = compose(compose(R, s.to_relation()), R);
  v.join = join(alg, r, s);
  v.holds = v.composite == v.join.to_relation();
  return v;
}

std::optional<std::size_t> Clone3::find(const std::vector<Element>& table) const {
  for (std::size_t i = 0; i < tables_.size(); ++i)
    if (tables_[i] == table) return i;
  return std::nullopt;
}

Term Clone3::term(std::size_t i) const {
  const Derivation& d = derivations_.at(i);
  if (d.op == kProjection) return Term::variable(vars_[d.children[0]]);
  std::vector<Term> args;
  for (std::size_t c : d.children) args.push_back(term(c));
  return Term::apply(alg_->signature().op(d.op).name, std::move(args));
}

TermWitness Clone3::witness(std::size_t i) const {
  TermWitness w{tables_[i], std::nullopt};
  if (has_terms()) w.term = term(i);
  return w;
}

std::size_t CloneGenerator::TableHash::operator()(const std::vector<Element>& t) const {
  std::size_t h = 1469598103934665603ULL;
  for (Element v : t) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

CloneGenerator::CloneGenerator(const FiniteAlgebra& alg, CloneOptions options)
    : alg_(&alg), options_(options) {
  if (options_.cap < 3) throw Error("clone cap must be at least 3");
  const std::size_t n = alg.size();
  clone_.alg_ = &alg;
  clone_.n_ = n;
  clone_.vars_ = projection_names(alg.signature());
  std::vector<std::pair<std::vector<Element>, Clone3::Derivation>> level;
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<Element> t(n * n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          const Element args[3] = {a, b, c};
          t[at(n, a, b, c)] = args[k];
        }
    level.emplace_back(std::move(t), Clone3::Derivation{kProjection, {k}});
  }
  add_level(std::move(level));
}

void CloneGenerator::add_level(std::vector<std::pair<std::vector<Element>, Clone3::Derivation>> level) {
  std::map<std::vector<Element>, Clone3::Derivation> sorted;
  for (auto& [t, d] : level)
    if (!index_.count(t)) sorted.emplace(std::move(t), std::move(d));
  const std::size_t depth = level_start_.size();
  level_start_.push_back(clone_.tables_.size());
  for (auto& [t, d] : sorted) {
    if (clone_.tables_.size() >= options_.cap) {
      at_cap_ = true;
      break;
    }
    index_.emplace(t, clone_.tables_.size());
    clone_.tables_.push_back(t);
    clone_.depths_.push_back(depth);
    if (options_.keep_derivations) clone_.derivations_.push_back(std::move(d));
  }
}

bool CloneGenerator::step() {
  if (done_ || at_cap_) return false;
  const Signature& sig = alg_->signature();
  const std::size_t total = clone_.tables_.size();
  const std::size_t frontier = level_start_.back();
  const std::size_t first_step = level_start_.size() == 1;
  const std::size_t cells = clone_.n_ * clone_.n_ * clone_.n_;
  std::map<std::vector<Element>, Clone3::Derivation> level;
  bool capped = false;
  std::vector<Element> args;
  std::vector<Element> out(cells);
  for (std::size_t op = 0; op < sig.size() && !capped; ++op) {
    const unsigned arity = sig.op(op).arity;
    if (arity == 0 && !first_step) continue;
    args.resize(arity);
    detail::for_each_tuple_while(total, arity, [&](std::span<const Element> children) {
      bool touches_frontier = arity == 0;
      for (Element c : children) touches_frontier = touches_frontier || c >= frontier;
      if (!touches_frontier) return true;
      for (std::size_t i = 0; i < cells; ++i) {
        for (unsigned k = 0; k < arity; ++k) args[k] = clone_.tables_[children[k]][i];
        out[i] = alg_->apply(op, args);
      }
      if (index_.count(out) || level.count(out)) return true;
      level.emplace(out, Clone3::Derivation{op, std::vector<std::size_t>(children.begin(), children.end())});
      if (total + level.size() >= options_.cap) capped = true;
      return !capped;
    });
  }
  if (level.empty()) {
    done_ = true;
    clone_.complete_ = true;
    return false;
  }
  std::vector<std::pair<std::vector<Element>, Clone3::Derivation>> items;
  items.reserve(level.size());
  for (auto& [t, d] : level) items.emplace_back(t, std::move(d));
  add_level(std::move(items));
  if (capped) at_cap_ = true;
  return !at_cap_;
}

Clone3 generate_clone3(const FiniteAlgebra& alg, const CloneOptions& options) {
  CloneGenerator gen(alg, options);
  while (gen.step()) {
  }
  return std::move(gen).take();
}

bool is_maltsev_table(std::size_t n, const std::vector<Element>& p) {
  if (p.size() != n * n * n) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p[at(n, a, b, b)] != a || p[at(n, a, a, b)] != b) return false;
  return true;
}

bool is_hm_pair(std::size_t n, const std::vector<Element>& p, const std::vector<Element>& q) {
  if (p.size() != n * n * n || q.size() != n * n * n) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (p[at(n, a, b, b)] != a) return false;
      if (q[at(n, a, a, b)] != b) return false;
      if (p[at(n, a, a, b)] != q[at(n, a, b, b)]) return false;
    }
  return true;
}

MaltsevSearch find_maltsev_term(const FiniteAlgebra& alg, const CloneOptions& options) {
  CloneGenerator gen(alg, options);
  const std::size_t n = alg.size();
  std::size_t checked = 0;
  while (true) {
    const Clone3& clone = gen.clone();
    for (; checked < clone.size(); ++checked)
      if (is_maltsev_table(n, clone.table(checked)))
        return MaltsevSearch{SearchStatus::found, clone.witness(checked), clone.size()};
    if (!gen.step()) break;
  }
  const Clone3& clone = gen.clone();
  for (; checked < clone.size(); ++checked)
    if (is_maltsev_table(n, clone.table(checked)))
      return MaltsevSearch{SearchStatus::found, clone.witness(checked), clone.size()};
  return MaltsevSearch{clone.complete() ? SearchStatus::absent : SearchStatus::inconclusive,
                       std::nullopt, clone.size()};
}

HagemannMitschkeSearch find_hm_terms(const FiniteAlgebra& alg, const CloneOptions& options) {
  CloneGenerator gen(alg, options);
  const std::size_t n = alg.size();
  std::map<std::vector<Element>, std::size_t> least_p;  // p(x,x,y) -> least p
  std::vector<std::pair<std::size_t, std::vector<Element>>> qs;  // q, q(x,y,y)
  std::size_t checked = 0;
  auto scan = [&]() -> std::optional<HagemannMitschkeSearch> {
    const Clone3& clone = gen.clone();
    for (; checked < clone.size(); ++checked) {
      const auto& t = clone.table(checked);
      if (satisfies_p_xyy(n, t)) least_p.emplace(restrict_xxy(n, t), checked);
      if (satisfies_q_xxy(n, t)) qs.emplace_back(checked, restrict_xyy(n, t));
    }
    for (const auto& [q, key] : qs) {
      auto it = least_p.find(key);
      if (it == least_p.end()) continue;
      return HagemannMitschkeSearch{SearchStatus::found, clone.witness(it->second), clone.witness(q),
                                    clone.size()};
    }
    return std::nullopt;
  };
  while (true) {
    if (auto found = scan()) return *found;
    if (!gen.step()) break;
  }
  if (auto found = scan()) return *found;
  const Clone3& clone = gen.clone();
  return HagemannMitschkeSearch{clone.complete() ? SearchStatus::absent : SearchStatus::inconclusive,
                                std::nullopt, std::nullopt, clone.size()};
}

}  // namespace goursat
