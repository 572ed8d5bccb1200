#include "goursat/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "goursat/congruence.hpp"
#include "goursat/distributivity.hpp"
#include "goursat/eval.hpp"

namespace goursat {

namespace {

const Signature& group_signature() {
  static const Signature sig{{"m", 2}, {"i", 1}, {"e", 0}};
  return sig;
}

const Signature& ring_signature() {
  static const Signature sig{{"mul", 2}, {"add", 2}, {"neg", 1}, {"zero", 0}, {"one", 0}, {"star", 1}};
  return sig;
}

const Signature& heyting_signature() {
  static const Signature sig{{"meet", 2}, {"join", 2}, {"imp", 2}, {"zero", 0}, {"one", 0}};
  return sig;
}

const Signature& implication_signature() {
  static const Signature sig{{"imp", 2}};
  return sig;
}

const Signature& lattice_signature() {
  static const Signature sig{{"meet", 2}, {"join", 2}};
  return sig;
}

template <typename Fn>
std::vector<Element> binary_table(std::size_t n, Fn&& fn) {
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>(fn(a, b));
  return t;
}

template <typename Fn>
std::vector<Element> unary_table(std::size_t n, Fn&& fn) {
  std::vector<Element> t(n);
  for (Element a = 0; a < n; ++a) t[a] = static_cast<Element>(fn(a));
  return t;
}

std::vector<Element> constant(Element c) { return {c}; }

unsigned require_param(const std::string& family, std::optional<unsigned> param, unsigned min, unsigned max) {
  if (!param) throw Error("corpus family '" + family + "' needs a parameter");
  if (*param < min || *param > max)
    throw Error("parameter " + std::to_string(*param) + " for '" + family + "' outside " +
                std::to_string(min) + ".." + std::to_string(max));
  return *param;
}

void reject_param(const std::string& family, std::optional<unsigned> param) {
  if (param) throw Error("corpus family '" + family + "' takes no parameter");
}

FiniteAlgebra cyclic_group(const std::string& name, unsigned n) {
  return FiniteAlgebra(name, group_signature(), n,
                       {binary_table(n, [n](Element a, Element b) { return (a + b) % n; }),
                        unary_table(n, [n](Element a) { return (n - a) % n; }), constant(0)});
}

FiniteAlgebra symmetric3(const std::string& name) {
  std::vector<std::array<Element, 3>> perms;
  std::array<Element, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<Element, 3>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t n = perms.size();
  // (a·b)(x) = a(b(x))
  auto mul = binary_table(n, [&](Element a, Element b) {
    std::array<Element, 3> c{};
    for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    return index(c);
  });
  auto inv = unary_table(n, [&](Element a) {
    std::array<Element, 3> c{};
    for (Element x = 0; x < 3; ++x) c[perms[a][x]] = x;
    return index(c);
  });
  return FiniteAlgebra(name, group_signature(), n, {mul, inv, constant(0)});
}

FiniteAlgebra boolean_ring(const std::string& name, unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  const Element full = static_cast<Element>(n - 1);
  return FiniteAlgebra(name, ring_signature(), n,
                       {binary_table(n, [](Element a, Element b) { return a & b; }),
                        binary_table(n, [](Element a, Element b) { return a ^ b; }),
                        unary_table(n, [](Element a) { return a; }), constant(0), constant(full),
                        unary_table(n, [](Element a) { return a; })});
}

bool squarefree(unsigned n) {
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

FiniteAlgebra zmod_vnr(const std::string& name, unsigned n) {
  if (!squarefree(n)) throw Error("Z/" + std::to_string(n) + " is not von Neumann regular (n is not squarefree)");
  auto mul = [n](Element a, Element b) { return static_cast<Element>((std::size_t{a} * b) % n); };
  std::vector<Element> star(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> found;
    for (Element s = 0; s < n; ++s)
      if (mul(a, mul(s, s)) == s && mul(mul(a, a), s) == a) found.push_back(s);
    if (found.size() != 1)
      throw Error("element " + std::to_string(a) + " of Z/" + std::to_string(n) + " has " +
                  std::to_string(found.size()) + " pseudo-inverses");
    star[a] = found.front();
  }
  return FiniteAlgebra(name, ring_signature(), n,
                       {binary_table(n, mul), binary_table(n, [n](Element a, Element b) { return (a + b) % n; }),
                        unary_table(n, [n](Element a) { return (n - a) % n; }), constant(0),
                        constant(n == 1 ? 0 : 1), star});
}

FiniteAlgebra heyting_chain(const std::string& name, unsigned k) {
  const Element top = k - 1;
  return FiniteAlgebra(name, heyting_signature(), k,
                       {binary_table(k, [](Element a, Element b) { return std::min(a, b); }),
                        binary_table(k, [](Element a, Element b) { return std::max(a, b); }),
                        binary_table(k, [top](Element a, Element b) { return a <= b ? top : b; }),
                        constant(0), constant(top)});
}

FiniteAlgebra implication_from_boolean(const std::string& name, unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  const Element full = static_cast<Element>(n - 1);
  return FiniteAlgebra(name, implication_signature(), n,
                       {binary_table(n, [full](Element a, Element b) { return (~a | b) & full; })});
}

// Nonzero elements of the Boolean algebra 2^k; element e stands for mask e+1.
FiniteAlgebra implication_nonzero(const std::string& name, unsigned k) {
  const std::size_t n = (std::size_t{1} << k) - 1;
  const Element full = static_cast<Element>(n);
  return FiniteAlgebra(name, implication_signature(), n, {binary_table(n, [full](Element a, Element b) {
                         return ((~(a + 1) | (b + 1)) & full) - 1;
                       })});
}

FiniteAlgebra lattice_chain(const std::string& name, unsigned k) {
  return FiniteAlgebra(name, lattice_signature(), k,
                       {binary_table(k, [](Element a, Element b) { return std::min(a, b); }),
                        binary_table(k, [](Element a, Element b) { return std::max(a, b); })});
}

std::string entry_name(const std::string& family, std::optional<unsigned> param) {
  return param ? family + "(" + std::to_string(*param) + ")" : family;
}

const std::vector<std::string> kLatticeIds{
    "meet(x,y) = meet(y,x)", "join(x,y) = join(y,x)",
    "meet(x,meet(y,z)) = meet(meet(x,y),z)", "join(x,join(y,z)) = join(join(x,y),z)",
    "meet(x,join(x,y)) = x", "join(x,meet(x,y)) = x"};

}  // namespace

std::string to_string(PermutabilityClass c) {
  switch (c) {
    case PermutabilityClass::maltsev: return "maltsev";
    case PermutabilityClass::goursat_only: return "goursat-only";
    case PermutabilityClass::neither: return "neither";
  }
  return "?";
}

std::vector<Identity> family_identities(const std::string& family, const Signature& sig) {
  std::vector<std::string> texts;
  if (family == "cyclic_group" || family == "klein4" || family == "sym3") {
    texts = {"m(x,m(y,z)) = m(m(x,y),z)", "m(x,e) = x", "m(e,x) = x", "m(x,i(x)) = e", "m(i(x),x) = e"};
  } else if (family == "boolean_ring" || family == "zmod_vnr") {
    texts = {"add(x,add(y,z)) = add(add(x,y),z)", "add(x,y) = add(y,x)", "add(x,zero) = x",
             "add(x,neg(x)) = zero", "mul(x,mul(y,z)) = mul(mul(x,y),z)", "mul(x,y) = mul(y,x)",
             "mul(x,one) = x", "mul(x,add(y,z)) = add(mul(x,y),mul(x,z))",
             // pseudo-inverse axioms
             "mul(x,mul(star(x),star(x))) = star(x)", "mul(mul(x,x),star(x)) = x"};
  } else if (family == "heyting_chain") {
    texts = kLatticeIds;
    for (const char* t :
         {"meet(x,zero) = zero", "join(x,one) = one",
          "meet(x,join(y,z)) = join(meet(x,y),meet(x,z))",
          "join(x,meet(imp(y,x),y)) = x", "x = meet(x,imp(y,meet(x,y)))",
          "imp(x,x) = one", "meet(x,imp(x,y)) = meet(x,y)", "meet(y,imp(x,y)) = y",
          "imp(x,meet(y,z)) = meet(imp(x,y),imp(x,z))"})
      texts.emplace_back(t);
  } else if (family == "implication_from_boolean" || family == "implication_nonzero") {
    texts = {"imp(imp(x,y),y) = imp(imp(y,x),x)", "imp(imp(x,y),x) = x", "imp(x,imp(y,z)) = imp(y,imp(x,z))"};
  } else if (family == "two_elt_lattice" || family == "lattice_chain") {
    texts = kLatticeIds;
  } else {
    throw Error("unknown corpus family '" + family + "'");
  }
  std::vector<Identity> ids;
  for (const auto& t : texts) ids.push_back(parse_identity(t, sig));
  return ids;
}

CorpusEntry builtin(const std::string& family, std::optional<unsigned> param) {
  const std::string name = entry_name(family, param);
  auto make = [&](FiniteAlgebra alg, PermutabilityClass perm, bool distributive,
                  std::optional<std::string> note = std::nullopt) {
    return CorpusEntry{name, family, param, std::move(alg), CorpusTags{perm, distributive, std::move(note)}, {}};
  };
  std::optional<CorpusEntry> entry;
  if (family == "cyclic_group") {
    const unsigned n = require_param(family, param, 1, 64);
    entry = make(cyclic_group(name, n), PermutabilityClass::maltsev, true);
  } else if (family == "klein4") {
    reject_param(family, param);
    const std::array<FiniteAlgebra, 2> z2{cyclic_group("cyclic_group(2)", 2), cyclic_group("cyclic_group(2)", 2)};
    entry = make(product(z2).renamed(name), PermutabilityClass::maltsev, false);
  } else if (family == "sym3") {
    reject_param(family, param);
    entry = make(symmetric3(name), PermutabilityClass::maltsev, true);
  } else if (family == "boolean_ring") {
    entry = make(boolean_ring(name, require_param(family, param, 0, 5)), PermutabilityClass::maltsev, true);
  } else if (family == "zmod_vnr") {
    entry = make(zmod_vnr(name, require_param(family, param, 1, 64)), PermutabilityClass::maltsev, true);
  } else if (family == "heyting_chain") {
    entry = make(heyting_chain(name, require_param(family, param, 1, 16)), PermutabilityClass::maltsev, true);
  } else if (family == "implication_from_boolean") {
    const unsigned k = require_param(family, param, 0, 4);
    // Boolean reducts: every congruence is a Boolean-algebra congruence, and
    // those permute.
    entry = make(implication_from_boolean(name, k), PermutabilityClass::goursat_only, true, "vacuous");
  } else if (family == "implication_nonzero") {
    const unsigned k = require_param(family, param, 1, 4);
    entry = make(implication_nonzero(name, k), PermutabilityClass::goursat_only, true,
                 k <= 1 ? std::optional<std::string>("vacuous") : std::nullopt);
  } else if (family == "two_elt_lattice") {
    reject_param(family, param);
    entry = make(lattice_chain(name, 2), PermutabilityClass::neither, true);
  } else if (family == "lattice_chain") {
    entry = make(lattice_chain(name, require_param(family, param, 1, 16)), PermutabilityClass::neither, true);
  } else {
    throw Error("unknown corpus algebra '" + family + "'");
  }
  for (const auto& id : family_identities(family, entry->algebra.signature())) {
    auto verdict = satisfies_identity(entry->algebra, id);
    if (!verdict.holds) throw Error(name + " violates its defining identity " + render(id));
  }
  for (const auto& v : applicable_specs(entry->algebra)) entry->specs.push_back(v.name);
  return std::move(*entry);
}

CorpusEntry builtin_from_string(const std::string& text) {
  std::string family = text;
  std::optional<unsigned> param;
  auto cut = text.find_first_of("(:");
  if (cut != std::string::npos) {
    family = text.substr(0, cut);
    std::string rest = text.substr(cut + 1);
    if (text[cut] == '(') {
      if (rest.empty() || rest.back() != ')') throw Error("malformed corpus name '" + text + "'");
      rest.pop_back();
    }
    if (rest.empty() || rest.size() > 6 ||
        !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error("malformed corpus parameter in '" + text + "'");
    param = static_cast<unsigned>(std::stoul(rest));
  }
  return builtin(family, param);
}

std::vector<CorpusEntry> default_corpus() {
  const std::vector<std::pair<std::string, std::optional<unsigned>>> names{
      {"cyclic_group", 1},  {"cyclic_group", 2},
      {"cyclic_group", 3},  {"cyclic_group", 4},
      {"cyclic_group", 8},  {"klein4", std::nullopt},
      {"sym3", std::nullopt}, {"boolean_ring", 1},
      {"boolean_ring", 2},  {"boolean_ring", 3},
      {"zmod_vnr", 2},      {"zmod_vnr", 3},
      {"zmod_vnr", 6},      {"heyting_chain", 2},
      {"heyting_chain", 3}, {"heyting_chain", 4},
      {"implication_from_boolean", 1}, {"implication_from_boolean", 2},
      {"implication_from_boolean", 3}, {"implication_nonzero", 2},
      {"implication_nonzero", 3}, {"two_elt_lattice", std::nullopt},
      {"lattice_chain", 3}};
  std::vector<CorpusEntry> out;
  for (const auto& [family, param] : names) out.push_back(builtin(family, param));
  return out;
}

std::vector<SubvarietySpec> corpus_specs() {
  return {
      make_spec("trivial", Signature{}, {"x = y"}),
      make_spec("all", Signature{}, {}),
      make_spec("abelian-group", Signature{{"m", 2}}, {"m(x,y) = m(y,x)"}),
      make_spec("exponent-2", Signature{{"m", 2}, {"e", 0}}, {"m(x,x) = e"}),
      make_spec("boolean-from-heyting", Signature{{"imp", 2}, {"zero", 0}}, {"imp(imp(x,zero),zero) = x"}),
      make_spec("idempotent-ring", Signature{{"mul", 2}}, {"mul(x,x) = x"}),
  };
}

SubvarietySpec corpus_spec(const std::string& name) {
  for (auto& v : corpus_specs())
    if (v.name == name) return v;
  throw Error("unknown corpus spec '" + name + "'");
}

std::vector<SubvarietySpec> applicable_specs(const FiniteAlgebra& alg) {
  std::vector<SubvarietySpec> out;
  for (auto& v : corpus_specs())
    if (applicable(v, alg)) out.push_back(std::move(v));
  return out;
}

TagVerdict verify_tags(const CorpusEntry& entry, const CloneOptions& options) {
  const FiniteAlgebra& alg = entry.algebra;
  const CongruenceLattice lat = con_lattice(alg);
  TagVerdict v;
  auto fail = [&](const std::string& why) {
    v.holds = false;
    v.detail = entry.name + ": " + why;
    return v;
  };
  if (is_distributive(lat).holds != entry.tags.distributive)
    return fail(entry.tags.distributive ? "Con is not distributive" : "Con is unexpectedly distributive");
  bool all_two = true;
  bool all_three = true;
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      auto level = permutability_level(alg, lat[i], lat[j]);
      all_two = all_two && level == PermutabilityLevel::two;
      all_three = all_three && level != PermutabilityLevel::neither;
    }
  switch (entry.tags.permutability) {
    case PermutabilityClass::maltsev: {
      if (find_maltsev_term(alg, options).status != SearchStatus::found) return fail("no Mal'tsev term found");
      if (!all_two) return fail("a congruence pair does not permute");
      break;
    }
    case PermutabilityClass::goursat_only: {
      if (find_hm_terms(alg, options).status != SearchStatus::found) return fail("no Hagemann-Mitschke terms found");
      if (!all_three) return fail("a congruence pair is not 3-permutable");
      const bool vacuous = entry.tags.note == std::optional<std::string>("vacuous");
      if (all_two && !vacuous) return fail("every congruence pair permutes but no vacuous note is recorded");
      if (!all_two && vacuous) return fail("marked vacuous but a non-permuting pair exists");
      break;
    }
    case PermutabilityClass::neither: {
      if (find_hm_terms(alg, options).status != SearchStatus::absent)
        return fail("Hagemann-Mitschke search did not end in absence");
      break;
    }
  }
  return v;
}

}  // namespace goursat
