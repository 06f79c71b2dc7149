#include "gomplab/gomp_axioms.hpp"

#include <algorithm>
#include <set>

namespace gomplab {

namespace {

std::vector<ElementSet> intersection_closure(const std::vector<ElementSet>& generators,
                                             ElementSet universe) {
  std::set<ElementSet> seen(generators.begin(), generators.end());
  seen.insert(universe);
  std::vector<ElementSet> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const ElementSet s = work.back();
    work.pop_back();
    for (ElementSet g : generators) {
      const ElementSet t = s & g;
      if (seen.insert(t).second) work.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

CheckResult agree_or_throw(const OrthoPoset& p, CheckResult upper, const CheckResult& lower,
                           const char* what) {
  if (upper.passed != lower.passed) {
    throw InvariantViolation(std::string(what) +
                             ": upper and lower forms disagree on an orthoposet of size " +
                             std::to_string(p.size()));
  }
  return upper;
}

}  // namespace

std::vector<ElementSet> distinct_upper_cones(const OrthoPoset& p) {
  std::vector<ElementSet> principal;
  for (Element x = 0; x < p.size(); ++x) principal.push_back(p.up(x));
  return intersection_closure(principal, p.universe());
}

std::vector<ElementSet> distinct_lower_cones(const OrthoPoset& p) {
  std::vector<ElementSet> principal;
  for (Element x = 0; x < p.size(); ++x) principal.push_back(p.down(x));
  return intersection_closure(principal, p.universe());
}

CheckResult gomp_upper_condition(const OrthoPoset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) {
      const ElementSet inner = lower_cone(p, ElementSet{p.comp(x), y});
      ElementSet args = inner;
      args.insert(x);
      const ElementSet rhs = upper_cone(p, args);
      if (p.up(y) != rhs) return CheckResult::fail("gomp_upper", {x, y}, {p.up(y), rhs});
    }
  }
  return CheckResult::pass();
}

CheckResult gomp_lower_condition(const OrthoPoset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) {
      ElementSet args = upper_cone(p, ElementSet{x, p.comp(y)});
      args.insert(y);
      const ElementSet rhs = lower_cone(p, args);
      if (p.down(x) != rhs) return CheckResult::fail("gomp_lower", {x, y}, {p.down(x), rhs});
    }
  }
  return CheckResult::pass();
}

CheckResult strong_gomp_upper_condition(const OrthoPoset& p) {
  const auto cones = distinct_upper_cones(p);
  for (Element x = 0; x < p.size(); ++x) {
    for (ElementSet c : cones) {
      if (!lower_cone(p, c).contains(x)) continue;
      ElementSet inner_args = c;
      inner_args.insert(p.comp(x));
      ElementSet args = lower_cone(p, inner_args);
      args.insert(x);
      const ElementSet rhs = upper_cone(p, args);
      if (c != rhs) return CheckResult::fail("strong_gomp_upper", {x}, {c, rhs});
    }
  }
  return CheckResult::pass();
}

CheckResult strong_gomp_lower_condition(const OrthoPoset& p) {
  const auto cones = distinct_lower_cones(p);
  for (Element y = 0; y < p.size(); ++y) {
    for (ElementSet a : cones) {
      if (!upper_cone(p, a).contains(y)) continue;
      ElementSet inner_args = a;
      inner_args.insert(p.comp(y));
      ElementSet args = upper_cone(p, inner_args);
      args.insert(y);
      const ElementSet rhs = lower_cone(p, args);
      if (a != rhs) return CheckResult::fail("strong_gomp_lower", {y}, {a, rhs});
    }
  }
  return CheckResult::pass();
}

CheckResult is_gomp(const OrthoPoset& p) {
  if (auto ortho = is_orthoposet(p); !ortho) return ortho;
  return agree_or_throw(p, gomp_upper_condition(p), gomp_lower_condition(p), "gomp");
}

CheckResult is_strong_gomp(const OrthoPoset& p) {
  if (auto ortho = is_orthoposet(p); !ortho) return ortho;
  return agree_or_throw(p, strong_gomp_upper_condition(p), strong_gomp_lower_condition(p),
                        "strong gomp");
}

}  // namespace gomplab
