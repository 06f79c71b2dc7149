#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gomplab/enumeration.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// A named yes/no property of a structure.
struct ClassPredicate {
  std::string name;
  std::string description;
  std::function<bool(const OrthoPoset&)> holds;
};

/// Every registered predicate, in a fixed order. Names:
/// orthoposet, de_morgan, lattice, gomp, strong_gomp, directoid, class_A,
/// variety_W, majority, maltsev, regularity, permutable, distributive,
/// regular, ortholattice, oml, nearly_oml, m_commutative.
/// Directoid-based predicates use the canonical assigned directoid.
const std::vector<ClassPredicate>& registered_predicates();
const ClassPredicate* find_predicate(std::string_view name);

struct PredicateLiteral {
  const ClassPredicate* predicate;
  bool negated;
};

/// Conjunction of possibly negated predicate names, e.g.
/// "orthoposet & !gomp" (also accepts "∧", "¬", "and", "not").
/// Throws std::invalid_argument on an unknown name or empty formula.
std::vector<PredicateLiteral> parse_predicate(std::string_view formula);
bool evaluate(const std::vector<PredicateLiteral>& formula, const OrthoPoset& p);

enum class SearchMode { FirstWitness, CountAll };

struct SearchSpec {
  int max_n = 8;
  std::string predicate;
  SearchMode mode = SearchMode::FirstWitness;
};

struct SearchOutcome {
  /// First match in enumeration order (sizes ascending), in first-witness mode.
  std::optional<OrthoPoset> witness;
  /// Largest size fully searched (== max_n unless a witness stopped early).
  int searched_up_to = 0;
  /// Matches per size, in count-all mode.
  std::vector<std::pair<int, std::size_t>> counts;
};

/// Runs over the enumerated orthoposets of sizes 2..max_n.
SearchOutcome find_witness(const SearchSpec& spec, const EnumerationOptions& options = {});

}  // namespace gomplab
