#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gomplab/element_set.hpp"

namespace gomplab {

/// Outcome of deciding one condition on a finite structure.
///
/// A failing result names the clause that broke (`condition_tag`) and carries
/// the lexicographically first counterexample found: the tuple of element ids
/// in `witness`, plus any sets involved (cones, congruence classes, completion
/// elements) in `witness_sets`. Element ids index whatever universe the check
/// ran on: the base poset, a directoid, or the elements of a completion.
struct CheckResult {
  bool passed = true;
  std::string condition_tag;
  std::vector<Element> witness;
  std::vector<ElementSet> witness_sets;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string tag, std::vector<Element> witness,
                          std::vector<ElementSet> sets = {}) {
    return {false, std::move(tag), std::move(witness), std::move(sets)};
  }

  explicit operator bool() const { return passed; }
};

}  // namespace gomplab
