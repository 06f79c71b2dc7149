#include "gomplab/residuation.hpp"

#include "gomplab/gomp_axioms.hpp"

namespace gomplab {

namespace {

ElementSet L(const OrthoPoset& p, ElementSet a) { return lower_cone(p, a); }
ElementSet U(const OrthoPoset& p, ElementSet a) { return upper_cone(p, a); }

std::vector<ElementSet> gomp_R_table(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<ElementSet> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = L(p, U(p, ElementSet{p.comp(x), y}));
    }
  }
  return table;
}

std::vector<ElementSet> strong_R_table(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<ElementSet> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet args = L(p, ElementSet{x, y});
      args.insert(p.comp(x));
      table[static_cast<std::size_t>(x) * n + y] = L(p, U(p, args));
    }
  }
  return table;
}

std::vector<ElementSet> strong_M_table(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<ElementSet> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet args = U(p, ElementSet{x, p.comp(y)});
      args.insert(y);
      table[static_cast<std::size_t>(x) * n + y] = L(p, args);
    }
  }
  return table;
}

CheckResult antitone_clause(const OrthoPoset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) {
      if (!p.leq(p.comp(y), p.comp(x))) return CheckResult::fail("antitone", {x, y});
    }
  }
  return CheckResult::pass();
}

CheckResult clause_i(const ResiduationOperators& ops) {
  const OrthoPoset& p = ops.base;
  const int n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(p.comp(x), y)) continue;
      const ElementSet lxy = L(p, ElementSet{x, y});
      for (Element z = 0; z < n; ++z) {
        if (!lxy.is_subset_of(p.down(z))) continue;
        if (!p.down(x).is_subset_of(ops.R(y, z))) {
          return CheckResult::fail("i", {x, y, z}, {ops.R(y, z)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult clause_ii(const ResiduationOperators& ops) {
  const OrthoPoset& p = ops.base;
  const int n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet lxy = L(p, ElementSet{x, y});
      for (Element z : p.down(y)) {
        if (!p.down(x).is_subset_of(ops.R(y, z))) continue;
        if (!lxy.is_subset_of(p.down(z))) {
          return CheckResult::fail("ii", {x, y, z}, {ops.R(y, z)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult r_of_zero_clause(const ResiduationOperators& ops, const char* tag) {
  const OrthoPoset& p = ops.base;
  for (Element x = 0; x < p.size(); ++x) {
    if (ops.R(x, p.bottom()) != p.down(p.comp(x))) {
      return CheckResult::fail(tag, {x}, {ops.R(x, p.bottom())});
    }
  }
  return CheckResult::pass();
}

CheckResult clause_iv(const ResiduationOperators& ops) {
  const OrthoPoset& p = ops.base;
  for (Element x = 0; x < p.size(); ++x) {
    const Element xcc = p.comp(p.comp(x));
    if (ops.R(xcc, x) != p.universe()) return CheckResult::fail("iv", {x}, {ops.R(xcc, x)});
  }
  return CheckResult::pass();
}

}  // namespace

ResiduationOperators build_R_gomp(const OrthoPoset& p) {
  return {p, gomp_R_table(p), std::nullopt};
}

ResiduationOperators build_MR_strong(const OrthoPoset& p) {
  return {p, strong_R_table(p), strong_M_table(p)};
}

CheckResult conditional_residuation_clause(const ResiduationOperators& ops,
                                           std::string_view clause) {
  if (clause == "antitone") return antitone_clause(ops.base);
  if (clause == "i") return clause_i(ops);
  if (clause == "ii") return clause_ii(ops);
  if (clause == "iii") return r_of_zero_clause(ops, "iii");
  if (clause == "iv") return clause_iv(ops);
  throw std::invalid_argument("unknown residuation clause '" + std::string(clause) + "'");
}

CheckResult is_conditionally_operator_residuated(const ResiduationOperators& ops) {
  for (const char* clause : {"antitone", "i", "ii", "iii", "iv"}) {
    if (auto r = conditional_residuation_clause(ops, clause); !r) return r;
  }
  return CheckResult::pass();
}

CheckResult satisfies_operator_divisibility(const ResiduationOperators& ops) {
  const OrthoPoset& p = ops.base;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) {
      ElementSet args = U(p, ops.R(y, x));
      args.insert(y);
      const ElementSet lhs = L(p, args);
      if (lhs != p.down(x)) return CheckResult::fail("divisibility", {x, y}, {lhs});
    }
  }
  return CheckResult::pass();
}

CheckResult is_operator_residuated(const ResiduationOperators& ops) {
  if (!ops.conjunction) {
    throw std::invalid_argument("operator residuation needs a conjunction table");
  }
  const OrthoPoset& p = ops.base;
  const int n = p.size();
  if (auto r = antitone_clause(p); !r) return r;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet m = ops.M(x, y);
      for (Element z = 0; z < n; ++z) {
        const bool left = m.is_subset_of(p.down(z));
        const bool right = p.down(x).is_subset_of(ops.R(y, z));
        if (left && !right) {
          return CheckResult::fail("adjoint_forward", {x, y, z}, {m, ops.R(y, z)});
        }
        if (right && !left) {
          return CheckResult::fail("adjoint_backward", {x, y, z}, {m, ops.R(y, z)});
        }
      }
    }
  }
  if (auto r = r_of_zero_clause(ops, "ii"); !r) return r;
  for (Element x = 0; x < n; ++x) {
    const Element xcc = p.comp(p.comp(x));
    if (ops.R(x, xcc) != p.universe()) return CheckResult::fail("iii", {x}, {ops.R(x, xcc)});
    if (ops.R(xcc, x) != p.universe()) return CheckResult::fail("iii", {x}, {ops.R(xcc, x)});
  }
  return CheckResult::pass();
}

bool matches_gomp_formula(const ResiduationOperators& ops) {
  return ops.implication == gomp_R_table(ops.base);
}

bool matches_strong_formula(const ResiduationOperators& ops) {
  return ops.conjunction && ops.implication == strong_R_table(ops.base) &&
         *ops.conjunction == strong_M_table(ops.base);
}

CheckResult verify_residuation_theorems(const OrthoPoset& p) {
  const bool gomp = is_gomp(p).passed;
  const bool strong = is_strong_gomp(p).passed;

  const auto r_ops = build_R_gomp(p);
  const bool conditional = is_conditionally_operator_residuated(r_ops).passed &&
                           satisfies_operator_divisibility(r_ops).passed;
  if (gomp != conditional) return CheckResult::fail("gomp_iff_conditional", {});

  const auto mr_ops = build_MR_strong(p);
  const bool residuated = is_operator_residuated(mr_ops).passed &&
                          satisfies_operator_divisibility(mr_ops).passed;
  if (strong && !residuated) return CheckResult::fail("strong_implies_residuated", {});
  if (residuated && !gomp) return CheckResult::fail("residuated_implies_gomp", {});
  return CheckResult::pass();
}

bool conjunction_is_commutative(const ResiduationOperators& ops) {
  if (!ops.conjunction) return false;
  const int n = ops.base.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (ops.M(x, y) != ops.M(y, x)) return false;
    }
  }
  return true;
}

}  // namespace gomplab
