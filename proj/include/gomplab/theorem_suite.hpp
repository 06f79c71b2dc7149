#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gomplab/directoid.hpp"
#include "gomplab/enumeration.hpp"

namespace gomplab {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

struct SuiteOptions {
  int max_n = 8;
  EnumerationOptions enumeration;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> progress;
};

/// Exhaustive theorem checks over enumerated structures up to max_n:
///   1 GOMP <=> conditional operator residuation with divisibility
///   2 strong GOMP => operator residuation => GOMP
///   3 GOMP <=> every assigned directoid is in class A (n <= 7)
///   4 W contained in A on all commutative idempotent algebras with <= 4 elements
///   5 term-based and direct congruence properties (n <= 6)
///   6 strong GOMP <=> nearly orthomodular completion; OML completion => strong
///   7 fixture witnesses
///   9 enumeration counts for n = 2, 3, 4 and worker-count stability
std::vector<CriterionResult> run_theorem_suite(const SuiteOptions& options);

/// Visits every algebra (join, ', 0, 1) on n elements whose join is
/// commutative and idempotent and whose unary map is an involution.
void for_each_commutative_idempotent_algebra(int n,
                                             const std::function<void(const Directoid&)>& visit);

}  // namespace gomplab
