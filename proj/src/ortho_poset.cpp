#include "gomplab/ortho_poset.hpp"

#include <algorithm>
#include <set>

namespace gomplab {

namespace {

void validate_size(int n) {
  if (n < 1 || n > kMaxElements) {
    throw StructureError("structure size must be in 1.." +
                         std::to_string(kMaxElements) + ", got " +
                         std::to_string(n));
  }
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

OrthoPoset::OrthoPoset(std::vector<ElementSet> down, std::vector<Element> comp,
                       std::vector<std::string> names)
    : down_(std::move(down)), comp_(std::move(comp)), names_(std::move(names)) {
  const int n = size();
  validate_size(n);
  if (static_cast<int>(comp_.size()) != n) {
    throw StructureError("unary map must have exactly one image per element");
  }
  for (Element c : comp_) {
    if (c < 0 || c >= n) throw StructureError("unary map image out of range");
  }
  if (names_.empty()) names_ = default_names(n);
  if (static_cast<int>(names_.size()) != n) {
    throw StructureError("name table size does not match element count");
  }
  std::set<std::string_view> seen;
  for (const auto& nm : names_) {
    if (nm.empty()) throw StructureError("element names must be non-empty");
    if (!seen.insert(nm).second) {
      throw StructureError("duplicate element name '" + nm + "'");
    }
  }

  const ElementSet all = ElementSet::universe(n);
  up_.assign(n, ElementSet{});
  for (Element y = 0; y < n; ++y) {
    if (!down_[y].is_subset_of(all)) throw StructureError("order refers to unknown element");
    if (!down_[y].contains(y)) throw StructureError("order is not reflexive");
    for (Element x : down_[y]) up_[x].insert(y);
  }
  for (Element y = 0; y < n; ++y) {
    for (Element x : down_[y]) {
      if (x != y && down_[x].contains(y)) {
        throw StructureError("order has a cycle through '" + names_[x] +
                             "' and '" + names_[y] + "'");
      }
      if (!down_[x].is_subset_of(down_[y])) throw StructureError("order is not transitive");
    }
  }

  bool found_bottom = false;
  bool found_top = false;
  for (Element x = 0; x < n; ++x) {
    if (up_[x] == all) {
      bottom_ = x;
      found_bottom = true;
    }
    if (down_[x] == all) {
      top_ = x;
      found_top = true;
    }
  }
  if (!found_bottom) throw StructureError("poset has no least element");
  if (!found_top) throw StructureError("poset has no greatest element");
}

OrthoPoset OrthoPoset::from_relation(int n, const Relation& relation,
                                     std::vector<Element> comp,
                                     std::vector<std::string> names) {
  validate_size(n);
  std::vector<ElementSet> down(n);
  for (Element x = 0; x < n; ++x) down[x].insert(x);
  for (auto [a, b] : relation) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw StructureError("order pair refers to an element outside 0.." +
                           std::to_string(n - 1));
    }
    down[b].insert(a);
  }
  // Warshall on down-set rows.
  for (Element k = 0; k < n; ++k) {
    for (Element y = 0; y < n; ++y) {
      if (down[y].contains(k)) down[y] |= down[k];
    }
  }
  return OrthoPoset(std::move(down), std::move(comp), std::move(names));
}

OrthoPoset OrthoPoset::from_down_sets(std::vector<ElementSet> down,
                                      std::vector<Element> comp,
                                      std::vector<std::string> names) {
  return OrthoPoset(std::move(down), std::move(comp), std::move(names));
}

ElementSet OrthoPoset::comp_image(ElementSet a) const {
  ElementSet out;
  for (Element x : a) out.insert(comp_[x]);
  return out;
}

std::optional<Element> OrthoPoset::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Relation OrthoPoset::covers() const {
  Relation out;
  const int n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      // y covers x iff nothing lies strictly between.
      ElementSet between = up_[x] & down_[y];
      between.erase(x);
      between.erase(y);
      if (between.empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

OrthoPoset OrthoPoset::renamed(std::vector<std::string> names) const {
  return OrthoPoset(down_, comp_, std::move(names));
}

OrthoPoset OrthoPoset::relabeled(std::span<const Element> perm) const {
  const int n = size();
  std::vector<ElementSet> down(n);
  std::vector<Element> comp(n);
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y : down_[x]) down[perm[x]].insert(perm[y]);
    comp[perm[x]] = perm[comp_[x]];
    names[perm[x]] = names_[x];
  }
  return OrthoPoset(std::move(down), std::move(comp), std::move(names));
}

ElementSet lower_cone(const OrthoPoset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (Element x : a) out &= p.down(x);
  return out;
}

ElementSet upper_cone(const OrthoPoset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (Element x : a) out &= p.up(x);
  return out;
}

ElementSet minimal_elements(const OrthoPoset& p, ElementSet s) {
  ElementSet out;
  for (Element x : s) {
    ElementSet below = p.down(x) & s;
    below.erase(x);
    if (below.empty()) out.insert(x);
  }
  return out;
}

ElementSet maximal_elements(const OrthoPoset& p, ElementSet s) {
  ElementSet out;
  for (Element x : s) {
    ElementSet above = p.up(x) & s;
    above.erase(x);
    if (above.empty()) out.insert(x);
  }
  return out;
}

std::optional<Element> least_element(const OrthoPoset& p, ElementSet s) {
  for (Element x : s) {
    if (s.is_subset_of(p.up(x))) return x;
  }
  return std::nullopt;
}

std::optional<Element> greatest_element(const OrthoPoset& p, ElementSet s) {
  for (Element x : s) {
    if (s.is_subset_of(p.down(x))) return x;
  }
  return std::nullopt;
}

std::optional<Element> supremum(const OrthoPoset& p, ElementSet a) {
  return least_element(p, upper_cone(p, a));
}

CheckResult is_orthoposet(const OrthoPoset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x) {
    if (p.comp(p.comp(x)) != x) return CheckResult::fail("involution", {x});
  }
  const ElementSet zero = ElementSet::singleton(p.bottom());
  const ElementSet one = ElementSet::singleton(p.top());
  for (Element x = 0; x < n; ++x) {
    const ElementSet pair{x, p.comp(x)};
    const ElementSet lower = lower_cone(p, pair);
    if (lower != zero) return CheckResult::fail("complement_lower", {x}, {lower});
    const ElementSet upper = upper_cone(p, pair);
    if (upper != one) return CheckResult::fail("complement_upper", {x}, {upper});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up(x)) {
      if (!p.leq(p.comp(y), p.comp(x))) return CheckResult::fail("antitone", {x, y});
    }
  }
  return CheckResult::pass();
}

CheckResult check_de_morgan(const OrthoPoset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet pair{x, y};
      const ElementSet comp_pair{p.comp(x), p.comp(y)};
      const ElementSet lhs = p.comp_image(lower_cone(p, pair));
      const ElementSet rhs = upper_cone(p, comp_pair);
      if (lhs != rhs) return CheckResult::fail("de_morgan_lower", {x, y}, {lhs, rhs});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet pair{x, y};
      const ElementSet comp_pair{p.comp(x), p.comp(y)};
      const ElementSet lhs = p.comp_image(upper_cone(p, pair));
      const ElementSet rhs = lower_cone(p, comp_pair);
      if (lhs != rhs) return CheckResult::fail("de_morgan_upper", {x, y}, {lhs, rhs});
    }
  }
  if (n > 16) return CheckResult::pass();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const ElementSet a(bits);
    const ElementSet lhs = p.comp_image(lower_cone(p, a));
    const ElementSet rhs = upper_cone(p, p.comp_image(a));
    if (lhs != rhs) return CheckResult::fail("de_morgan_lower_set", {}, {a, lhs, rhs});
  }
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const ElementSet a(bits);
    const ElementSet lhs = p.comp_image(upper_cone(p, a));
    const ElementSet rhs = lower_cone(p, p.comp_image(a));
    if (lhs != rhs) return CheckResult::fail("de_morgan_upper_set", {}, {a, lhs, rhs});
  }
  return CheckResult::pass();
}

bool is_lattice(const OrthoPoset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      const ElementSet pair{x, y};
      if (!least_element(p, upper_cone(p, pair))) return false;
      if (!greatest_element(p, lower_cone(p, pair))) return false;
    }
  }
  return true;
}

}  // namespace gomplab
