#include "gomplab/search.hpp"

#include <sstream>
#include <stdexcept>

#include "gomplab/congruence.hpp"
#include "gomplab/directoid.hpp"
#include "gomplab/dm_completion.hpp"
#include "gomplab/gomp_axioms.hpp"
#include "gomplab/residuation.hpp"

namespace gomplab {

namespace {

bool congruence_feasible(const OrthoPoset& p) { return p.size() <= kMaxCongruenceLatticeSize; }

std::vector<ClassPredicate> build_registry() {
  auto canonical = [](const OrthoPoset& p) { return assign_canonical_directoid(p); };
  return {
      {"orthoposet", "antitone involution that is a complementation",
       [](const OrthoPoset& p) { return is_orthoposet(p).passed; }},
      {"de_morgan", "De Morgan laws for cones",
       [](const OrthoPoset& p) { return check_de_morgan(p).passed; }},
      {"lattice", "every pair has a supremum and an infimum",
       [](const OrthoPoset& p) { return is_lattice(p); }},
      {"gomp", "generalized orthomodular poset",
       [](const OrthoPoset& p) { return is_gomp(p).passed; }},
      {"strong_gomp", "strong generalized orthomodular poset",
       [](const OrthoPoset& p) { return is_strong_gomp(p).passed; }},
      {"directoid", "canonical assignment satisfies the directoid axioms",
       [=](const OrthoPoset& p) { return is_directoid(canonical(p)).passed; }},
      {"class_A", "canonical assignment satisfies conditions (i)-(iv)",
       [=](const OrthoPoset& p) { return in_class_A(canonical(p)).passed; }},
      {"variety_W", "canonical assignment satisfies (i') and (ii)-(iv)",
       [=](const OrthoPoset& p) { return in_variety_W(canonical(p)).passed; }},
      {"majority", "m is a majority term on the canonical assignment",
       [=](const OrthoPoset& p) { return verify_majority(canonical(p)).passed; }},
      {"maltsev", "p is a Maltsev term on the canonical assignment",
       [=](const OrthoPoset& p) { return verify_maltsev(canonical(p)).passed; }},
      {"regularity", "t1, t2 witness regularity on the canonical assignment",
       [=](const OrthoPoset& p) { return verify_regularity_terms(canonical(p)).passed; }},
      {"permutable", "congruences of the canonical assignment permute",
       [=](const OrthoPoset& p) {
         return congruence_feasible(p) && direct_congruence_properties(canonical(p)).permutable;
       }},
      {"distributive", "congruence lattice of the canonical assignment is distributive",
       [=](const OrthoPoset& p) {
         return congruence_feasible(p) && direct_congruence_properties(canonical(p)).distributive;
       }},
      {"regular", "congruences of the canonical assignment are determined by one class",
       [=](const OrthoPoset& p) {
         return congruence_feasible(p) && direct_congruence_properties(canonical(p)).regular;
       }},
      {"ortholattice", "the completion is an ortholattice",
       [](const OrthoPoset& p) { return is_ortholattice(dm_completion(p)).passed; }},
      {"oml", "the completion is an orthomodular lattice",
       [](const OrthoPoset& p) { return is_orthomodular_lattice(dm_completion(p)).passed; }},
      {"nearly_oml", "the completion is nearly an orthomodular lattice",
       [](const OrthoPoset& p) { return is_nearly_oml(dm_completion(p)).passed; }},
      {"m_commutative", "M(x,y) = M(y,x) for the strong conjunction",
       [](const OrthoPoset& p) { return conjunction_is_commutative(build_MR_strong(p)); }},
  };
}

std::string normalize(std::string_view formula) {
  std::string s(formula);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
      s.replace(pos, from.size(), to);
    }
  };
  replace_all("∧", " & ");
  replace_all("¬", " ! ");
  replace_all("&", " & ");
  replace_all("!", " ! ");
  return s;
}

}  // namespace

const std::vector<ClassPredicate>& registered_predicates() {
  static const std::vector<ClassPredicate> registry = build_registry();
  return registry;
}

const ClassPredicate* find_predicate(std::string_view name) {
  for (const auto& p : registered_predicates()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::vector<PredicateLiteral> parse_predicate(std::string_view formula) {
  std::istringstream in(normalize(formula));
  std::vector<PredicateLiteral> out;
  bool negate = false;
  bool expect_operand = true;
  for (std::string tok; in >> tok;) {
    if (tok == "&" || tok == "and") {
      if (expect_operand) throw std::invalid_argument("misplaced '&' in predicate");
      expect_operand = true;
      continue;
    }
    if (tok == "!" || tok == "not") {
      if (!expect_operand) throw std::invalid_argument("missing '&' before negation");
      negate = !negate;
      continue;
    }
    if (!expect_operand) throw std::invalid_argument("missing '&' before '" + tok + "'");
    const ClassPredicate* pred = find_predicate(tok);
    if (!pred) throw std::invalid_argument("unknown predicate '" + tok + "'");
    out.push_back({pred, negate});
    negate = false;
    expect_operand = false;
  }
  if (out.empty() || expect_operand) throw std::invalid_argument("incomplete predicate formula");
  return out;
}

bool evaluate(const std::vector<PredicateLiteral>& formula, const OrthoPoset& p) {
  for (const auto& lit : formula) {
    if (lit.predicate->holds(p) == lit.negated) return false;
  }
  return true;
}

SearchOutcome find_witness(const SearchSpec& spec, const EnumerationOptions& options) {
  const auto formula = parse_predicate(spec.predicate);
  if (spec.max_n < kMinEnumerationSize || spec.max_n > kMaxEnumerationSize) {
    throw std::out_of_range("search bound must be in 2..10");
  }
  SearchOutcome outcome;
  for (int n = kMinEnumerationSize; n <= spec.max_n; ++n) {
    std::size_t matches = 0;
    for (const auto& p : enumerate_orthoposets(n, options)) {
      if (!evaluate(formula, p)) continue;
      if (spec.mode == SearchMode::FirstWitness) {
        outcome.witness = p;
        outcome.searched_up_to = n;
        return outcome;
      }
      ++matches;
    }
    if (spec.mode == SearchMode::CountAll) outcome.counts.emplace_back(n, matches);
    outcome.searched_up_to = n;
  }
  return outcome;
}

}  // namespace gomplab
