#pragma once

#include <optional>
#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// Set-valued binary operators on a poset, stored as dense n*n tables.
/// `implication` is R; `conjunction` is M and may be absent.
struct ResiduationOperators {
  OrthoPoset base;
  std::vector<ElementSet> implication;
  std::optional<std::vector<ElementSet>> conjunction;

  ElementSet R(Element x, Element y) const { return implication[index(x, y)]; }
  ElementSet M(Element x, Element y) const { return (*conjunction)[index(x, y)]; }
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x) * base.size() + y;
  }
};

/// R(x, y) = LU(x', y); no M.
ResiduationOperators build_R_gomp(const OrthoPoset& p);
/// M(x, y) = L(U(x, y'), y) and R(x, y) = LU(x', L(x, y)).
ResiduationOperators build_MR_strong(const OrthoPoset& p);

/// ' antitone ("antitone"), then for all x, y, z in lexicographic order:
///   "i"   x' <= y and L(x,y) in L(z) imply L(x) in R(y,z)
///   "ii"  z <= y and L(x) in R(y,z) imply L(x,y) in L(z)
///   "iii" R(x,0) = L(x')
///   "iv"  R(x'',x) = P
/// Clauses are checked one after another; the first failing one is reported.
CheckResult is_conditionally_operator_residuated(const ResiduationOperators& ops);
/// One clause of the above ("antitone", "i", "ii", "iii" or "iv") in isolation.
CheckResult conditional_residuation_clause(const ResiduationOperators& ops,
                                           std::string_view clause);

/// x <= y implies L(y, U(R(y, x))) = L(x). Witness (x, y).
CheckResult satisfies_operator_divisibility(const ResiduationOperators& ops);

/// ' antitone, then
///   "adjoint_forward"   M(x,y) in L(z) implies L(x) in R(y,z)
///   "adjoint_backward"  L(x) in R(y,z) implies M(x,y) in L(z)
///   "ii"                R(x,0) = L(x')
///   "iii"               R(x,x'') = P and R(x'',x) = P
/// Requires the M table.
CheckResult is_operator_residuated(const ResiduationOperators& ops);

/// Tables equal to the closed forms used by build_R_gomp / build_MR_strong.
bool matches_gomp_formula(const ResiduationOperators& ops);
bool matches_strong_formula(const ResiduationOperators& ops);

/// Checks, on one structure, that
///   "gomp_iff_conditional"  is_gomp <=> R = LU(x',y) is conditionally
///                           operator residuated with divisibility
///   "strong_implies_residuated"  is_strong_gomp => the M/R pair is operator
///                           residuated with divisibility
///   "residuated_implies_gomp"    that conclusion => is_gomp
CheckResult verify_residuation_theorems(const OrthoPoset& p);

/// Whether M(x, y) = M(y, x) for all pairs; recorded, not required.
bool conjunction_is_commutative(const ResiduationOperators& ops);

}  // namespace gomplab
