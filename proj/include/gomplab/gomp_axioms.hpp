#pragma once

#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// All distinct sets U(B) for B a subset of P, sorted by membership mask.
/// Every U(B) with B non-empty is an intersection of principal up-sets, so
/// the family is the intersection closure of {U(b)} together with U(empty) = P.
std::vector<ElementSet> distinct_upper_cones(const OrthoPoset& p);
/// Dual of distinct_upper_cones: all distinct L(A).
std::vector<ElementSet> distinct_lower_cones(const OrthoPoset& p);

/// x <= y implies U(y) = U(x, L(x', y)), checked over all comparable pairs.
/// Witness (x, y). A structure that is not an orthoposet fails with the
/// orthoposet witness instead. The equivalent lower form
/// x <= y implies L(x) = L(y, U(x, y')) is evaluated as well; if the two
/// verdicts differ on an orthoposet, InvariantViolation is thrown.
CheckResult is_gomp(const OrthoPoset& p);

/// For every x and every distinct upper cone C with x <= C:
/// C = U(x, L(x', C)). Witness (x) with sets {C}. Cross-checked against the
/// dual form L(A) <= y implies L(A) = L(y, U(L(A), y')) like is_gomp.
CheckResult is_strong_gomp(const OrthoPoset& p);

/// The individual conditions, without the orthoposet gate or cross-check.
CheckResult gomp_upper_condition(const OrthoPoset& p);
CheckResult gomp_lower_condition(const OrthoPoset& p);
CheckResult strong_gomp_upper_condition(const OrthoPoset& p);
CheckResult strong_gomp_lower_condition(const OrthoPoset& p);

}  // namespace gomplab
