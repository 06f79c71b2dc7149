#include "gomplab/dm_completion.hpp"

#include <algorithm>
#include <set>

#include "gomplab/gomp_axioms.hpp"

namespace gomplab {

DMLattice::DMLattice(OrthoPoset base) : base_(std::move(base)) {
  const auto cones = distinct_lower_cones(base_);
  for (Element x = 0; x < base_.size(); ++x) elements_.push_back(base_.down(x));
  for (ElementSet c : cones) {
    if (std::find(elements_.begin(), elements_.end(), c) == elements_.end()) {
      elements_.push_back(c);
    }
  }
  const int k = size();
  join_.resize(static_cast<std::size_t>(k) * k);
  meet_.resize(static_cast<std::size_t>(k) * k);
  star_.resize(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const ElementSet j = lower_cone(base_, upper_cone(base_, elements_[a] | elements_[b]));
      join_[static_cast<std::size_t>(a) * k + b] = index_of(j);
      meet_[static_cast<std::size_t>(a) * k + b] = index_of(elements_[a] & elements_[b]);
    }
    star_[a] = index_of(lower_cone(base_, base_.comp_image(elements_[a])));
  }
}

int DMLattice::index_of(ElementSet cone) const {
  auto it = std::find(elements_.begin(), elements_.end(), cone);
  if (it == elements_.end()) {
    throw InvariantViolation("set is not an element of the completion");
  }
  return static_cast<int>(it - elements_.begin());
}

bool DMLattice::contains(ElementSet s) const {
  return std::find(elements_.begin(), elements_.end(), s) != elements_.end();
}

int DMLattice::least_upper_bound(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (best < 0 || leq(c, best)) best = c;
  }
  for (int c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c) && !leq(best, c)) return -1;
  }
  return best;
}

DMLattice dm_completion(const OrthoPoset& p) { return DMLattice(p); }

CheckResult is_ortholattice(const DMLattice& lt) {
  const int k = lt.size();
  for (int a = 0; a < k; ++a) {
    if (lt.star(lt.star(a)) != a) return CheckResult::fail("involution", {a}, {lt.element(a)});
  }
  for (int a = 0; a < k; ++a) {
    if (lt.meet(a, lt.star(a)) != lt.bottom()) {
      return CheckResult::fail("complement_meet", {a}, {lt.element(a)});
    }
    if (lt.join(a, lt.star(a)) != lt.top()) {
      return CheckResult::fail("complement_join", {a}, {lt.element(a)});
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (lt.leq(a, b) && !lt.leq(lt.star(b), lt.star(a))) {
        return CheckResult::fail("antitone", {a, b}, {lt.element(a), lt.element(b)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_orthomodular_lattice(const DMLattice& lt) {
  if (auto r = is_ortholattice(lt); !r) return r;
  const int k = lt.size();
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!lt.leq(a, b)) continue;
      if (lt.join(a, lt.meet(lt.star(a), b)) != b) {
        return CheckResult::fail("orthomodular", {a, b}, {lt.element(a), lt.element(b)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_nearly_oml(const DMLattice& lt) {
  if (auto r = is_ortholattice(lt); !r) return r;
  for (Element x = 0; x < lt.base().size(); ++x) {
    const int a = lt.embed(x);
    for (int b = 0; b < lt.size(); ++b) {
      if (!lt.leq(a, b)) continue;
      if (lt.join(a, lt.meet(b, lt.star(a))) != b) {
        return CheckResult::fail("nearly_orthomodular", {x, b}, {lt.element(b)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult verify_dm_theorem(const OrthoPoset& p) {
  const DMLattice lt = dm_completion(p);
  const bool strong = is_strong_gomp(p).passed;
  if (strong != is_nearly_oml(lt).passed) return CheckResult::fail("strong_iff_nearly", {});
  if (is_orthomodular_lattice(lt).passed && !strong) {
    return CheckResult::fail("orthomodular_implies_strong", {});
  }
  return CheckResult::pass();
}

OrthoPoset dm_to_structure(const DMLattice& lt) {
  const int k = lt.size();
  if (k > kMaxElements) throw StructureError("completion too large to serialize");
  const OrthoPoset& p = lt.base();
  std::vector<ElementSet> down(k);
  std::vector<Element> comp(k);
  std::vector<std::string> names(k);
  std::set<std::string> used(p.names().begin(), p.names().end());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (lt.leq(b, a)) down[a].insert(b);
    }
    comp[a] = lt.star(a);
    if (a < p.size()) {
      names[a] = p.name(a);
      continue;
    }
    std::string nm;
    for (Element m : maximal_elements(p, lt.element(a))) {
      if (!nm.empty()) nm += '|';
      nm += p.name(m);
    }
    std::string candidate = nm;
    for (int suffix = 2; used.count(candidate); ++suffix) {
      candidate = nm + "~" + std::to_string(suffix);
    }
    used.insert(candidate);
    names[a] = candidate;
  }
  return OrthoPoset::from_down_sets(std::move(down), std::move(comp), std::move(names));
}

}  // namespace gomplab
