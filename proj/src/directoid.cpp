#include "gomplab/directoid.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gomplab {

Directoid::Directoid(int n, std::vector<Element> join_table, std::vector<Element> comp,
                     Element bottom, Element top)
    : n_(n), join_(std::move(join_table)), comp_(std::move(comp)), bottom_(bottom), top_(top) {
  if (n < 1 || n > kMaxElements) throw StructureError("directoid size out of range");
  if (join_.size() != static_cast<std::size_t>(n) * n) {
    throw StructureError("join table must have n*n entries");
  }
  if (comp_.size() != static_cast<std::size_t>(n)) {
    throw StructureError("unary map must have n entries");
  }
  auto in_range = [n](Element e) { return e >= 0 && e < n; };
  for (Element e : join_) {
    if (!in_range(e)) throw StructureError("join table entry out of range");
  }
  for (Element e : comp_) {
    if (!in_range(e)) throw StructureError("unary map entry out of range");
  }
  if (!in_range(bottom_) || !in_range(top_)) throw StructureError("constant out of range");
}

namespace {

struct ChoicePoint {
  Element x;
  Element y;
  std::vector<Element> options;  // canonical first
};

Element canonical_upper_bound(const OrthoPoset& p, Element x, Element y) {
  return minimal_elements(p, upper_cone(p, ElementSet{x, y})).first();
}

std::vector<ChoicePoint> choice_points(const OrthoPoset& p) {
  std::vector<ChoicePoint> points;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (p.comparable(x, y)) continue;
      const Element canonical = canonical_upper_bound(p, x, y);
      ChoicePoint cp{x, y, {canonical}};
      for (Element u : upper_cone(p, ElementSet{x, y})) {
        if (u != canonical) cp.options.push_back(u);
      }
      points.push_back(std::move(cp));
    }
  }
  return points;
}

std::vector<Element> comparable_join_table(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<Element> table(static_cast<std::size_t>(n) * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y)) table[static_cast<std::size_t>(x) * n + y] = y;
      else if (p.leq(y, x)) table[static_cast<std::size_t>(x) * n + y] = x;
    }
  }
  return table;
}

Directoid realize(const OrthoPoset& p, std::vector<Element> table,
                  const std::vector<ChoicePoint>& points, const std::vector<std::size_t>& pick) {
  const auto n = static_cast<std::size_t>(p.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Element u = points[i].options[pick[i]];
    table[points[i].x * n + points[i].y] = u;
    table[points[i].y * n + points[i].x] = u;
  }
  return Directoid(p.size(), std::move(table), p.comp_map(), p.bottom(), p.top());
}

}  // namespace

Directoid assign_canonical_directoid(const OrthoPoset& p) {
  const auto points = choice_points(p);
  return realize(p, comparable_join_table(p), points, std::vector<std::size_t>(points.size(), 0));
}

bool is_assigned_to(const Directoid& d, const OrthoPoset& p) {
  if (d.size() != p.size() || d.comp_map() != p.comp_map() || d.bottom() != p.bottom() ||
      d.top() != p.top()) {
    return false;
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) && d.join(x, y) != y) return false;
      if (d.join(x, y) != d.join(y, x)) return false;
      if (!upper_cone(p, ElementSet{x, y}).contains(d.join(x, y))) return false;
    }
  }
  return true;
}

std::uint64_t assignment_count(const OrthoPoset& p, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (const auto& cp : choice_points(p)) {
    const std::uint64_t k = cp.options.size();
    if (count > cap / k) return cap;
    count *= k;
  }
  return std::min(count, cap);
}

void enumerate_assignments(const OrthoPoset& p, std::uint64_t budget,
                           const std::function<bool(const Directoid&)>& visit) {
  if (budget == 0) throw std::invalid_argument("assignment budget must be at least 1");
  const auto points = choice_points(p);
  const auto base = comparable_join_table(p);
  std::vector<std::size_t> pick(points.size(), 0);
  for (std::uint64_t emitted = 0; emitted < budget; ++emitted) {
    if (!visit(realize(p, base, points, pick))) return;
    // odometer, last position fastest
    std::size_t i = points.size();
    while (i > 0) {
      --i;
      if (++pick[i] < points[i].options.size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (points.empty()) return;
  }
}

std::vector<Directoid> enumerate_assignments(const OrthoPoset& p, std::uint64_t budget) {
  std::vector<Directoid> out;
  enumerate_assignments(p, budget, [&](const Directoid& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

std::vector<Directoid> sample_assignments(const OrthoPoset& p, std::size_t count,
                                          std::uint64_t seed) {
  if (count == 0) return {};
  if (assignment_count(p, count + 1) <= count) return enumerate_assignments(p, count);
  const auto points = choice_points(p);
  const auto base = comparable_join_table(p);
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> pick(points.size(), 0);
  seen.insert(pick);
  std::vector<Directoid> out{realize(p, base, points, pick)};
  while (out.size() < count) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::uniform_int_distribution<std::size_t> dist(0, points[i].options.size() - 1);
      pick[i] = dist(rng);
    }
    if (seen.insert(pick).second) out.push_back(realize(p, base, points, pick));
  }
  return out;
}

CheckResult is_directoid(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x) {
    if (d.join(x, x) != x) return CheckResult::fail("idempotent", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (d.join(x, y) != d.join(y, x)) return CheckResult::fail("commutative", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element rhs = d.join(d.join(x, y), z);
        if (d.join(x, rhs) != rhs) return CheckResult::fail("weak_associative", {x, y, z});
      }
    }
  }
  return CheckResult::pass();
}

InducedOrderReport induced_order(const Directoid& d) {
  const int n = d.size();
  InducedOrderReport report;
  report.relation.assign(static_cast<std::size_t>(n) * n, false);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      report.relation[static_cast<std::size_t>(x) * n + y] = d.below(x, y);
    }
  }
  auto rel = [&](Element x, Element y) { return report.relation[static_cast<std::size_t>(x) * n + y]; };
  bool ok = true;
  for (Element x = 0; x < n && ok; ++x) {
    if (!rel(x, x)) ok = false;
    for (Element y = 0; y < n && ok; ++y) {
      if (x != y && rel(x, y) && rel(y, x)) ok = false;
      for (Element z = 0; z < n && ok; ++z) {
        if (rel(x, y) && rel(y, z) && !rel(x, z)) ok = false;
      }
    }
  }
  report.is_poset = ok;
  return report;
}

std::optional<OrthoPoset> induced_poset(const Directoid& d) {
  const auto report = induced_order(d);
  if (!report.is_poset) return std::nullopt;
  const int n = d.size();
  std::vector<ElementSet> down(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (report.relation[static_cast<std::size_t>(x) * n + y]) down[y].insert(x);
    }
  }
  try {
    return OrthoPoset::from_down_sets(std::move(down), d.comp_map());
  } catch (const StructureError&) {
    return std::nullopt;
  }
}

namespace {

CheckResult condition_i(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x) {
    const Element xc = d.comp(x);
    for (Element y = 0; y < n; ++y) {
      const Element xy = d.join(x, y);
      for (Element z = 0; z < n; ++z) {
        const Element xz = d.join(x, z);
        bool hypothesis = true;
        for (Element w = 0; w < n && hypothesis; ++w) {
          const Element inner = d.meet(d.meet(xc, w), d.meet(xy, w));
          hypothesis = d.join(xz, d.join(inner, z)) == z;
        }
        if (hypothesis && d.join(xy, z) != z) return CheckResult::fail("i", {x, y, z});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult condition_ii(const Directoid& d) {
  for (Element x = 0; x < d.size(); ++x) {
    for (Element y = 0; y < d.size(); ++y) {
      if (d.join(d.meet(x, y), x) != x) return CheckResult::fail("ii", {x, y});
    }
  }
  return CheckResult::pass();
}

CheckResult condition_iii(const Directoid& d) {
  for (Element x = 0; x < d.size(); ++x) {
    for (Element y = 0; y < d.size(); ++y) {
      if (d.join(d.join(x, y), d.join(d.comp(x), y)) != d.top()) {
        return CheckResult::fail("iii", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult condition_iv(const Directoid& d) {
  for (Element x = 0; x < d.size(); ++x) {
    if (d.comp(d.comp(x)) != x) return CheckResult::fail("iv", {x});
  }
  return CheckResult::pass();
}

CheckResult identity_i_prime(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = d.join(x, y);
      const Element inner = d.meet(d.comp(x), xy);
      for (Element z = 0; z < n; ++z) {
        const Element rhs = d.join(d.join(x, z), d.join(inner, z));
        if (!d.below(xy, rhs)) return CheckResult::fail("i_prime", {x, y, z});
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace

CharacterizationReport theorem_characterization_report(const Directoid& d) {
  return {condition_i(d), condition_ii(d), condition_iii(d), condition_iv(d)};
}

CheckResult in_class_A(const Directoid& d) {
  auto report = theorem_characterization_report(d);
  for (CheckResult* r : {&report.condition_i, &report.condition_ii, &report.condition_iii,
                         &report.condition_iv}) {
    if (!r->passed) return std::move(*r);
  }
  return CheckResult::pass();
}

CheckResult in_variety_W(const Directoid& d) {
  if (auto r = identity_i_prime(d); !r) return r;
  if (auto r = condition_ii(d); !r) return r;
  if (auto r = condition_iii(d); !r) return r;
  return condition_iv(d);
}

CheckResult cone_characterization_check(const OrthoPoset& p, const Directoid& d) {
  if (d.size() != p.size()) throw std::invalid_argument("directoid and poset differ in size");
  const int n = p.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const ElementSet lower = lower_cone(p, ElementSet{a, b});
      const ElementSet upper = upper_cone(p, ElementSet{a, b});
      ElementSet lower_image, lower_fixed, upper_image, upper_fixed;
      for (Element x = 0; x < n; ++x) {
        const Element m = d.meet(d.meet(a, x), d.meet(b, x));
        lower_image.insert(m);
        if (m == x) lower_fixed.insert(x);
        const Element j = d.join(d.join(a, x), d.join(b, x));
        upper_image.insert(j);
        if (j == x) upper_fixed.insert(x);
      }
      if (lower != lower_image) return CheckResult::fail("lower_image", {a, b}, {lower, lower_image});
      if (lower != lower_fixed) return CheckResult::fail("lower_fixed", {a, b}, {lower, lower_fixed});
      if (upper != upper_image) return CheckResult::fail("upper_image", {a, b}, {upper, upper_image});
      if (upper != upper_fixed) return CheckResult::fail("upper_fixed", {a, b}, {upper, upper_fixed});
    }
  }
  return CheckResult::pass();
}

}  // namespace gomplab
