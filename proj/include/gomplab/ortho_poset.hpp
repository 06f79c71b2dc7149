#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/element_set.hpp"

namespace gomplab {

/// Raised when a structure cannot be built: bad ids, cycles, missing bounds.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when two routes that must agree by construction do not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Relation = std::vector<std::pair<Element, Element>>;

/// A finite bounded poset (P, <=, ', 0, 1) with an arbitrary unary map.
///
/// Only the order and boundedness are validated on construction. Whether the
/// unary map is an antitone involution or a complementation is a question for
/// is_orthoposet(). Immutable once built.
class OrthoPoset {
 public:
  /// Builds the order as the reflexive-transitive closure of `relation`
  /// (pairs (a, b) meaning a <= b; a covering relation is enough).
  /// Throws StructureError on out-of-range ids, cycles, or a missing bound.
  static OrthoPoset from_relation(int n, const Relation& relation,
                                  std::vector<Element> comp,
                                  std::vector<std::string> names = {});

  /// Builds from principal down-sets, down[x] = {y : y <= x}, which must
  /// already be a partial order.
  static OrthoPoset from_down_sets(std::vector<ElementSet> down,
                                   std::vector<Element> comp,
                                   std::vector<std::string> names = {});

  int size() const { return static_cast<int>(down_.size()); }
  ElementSet universe() const { return ElementSet::universe(size()); }

  bool leq(Element x, Element y) const { return down_[y].contains(x); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  /// L(x)
  ElementSet down(Element x) const { return down_[x]; }
  /// U(x)
  ElementSet up(Element x) const { return up_[x]; }
  Element comp(Element x) const { return comp_[x]; }
  const std::vector<Element>& comp_map() const { return comp_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// A' = {x' : x in A}
  ElementSet comp_image(ElementSet a) const;

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;

  /// Pairs (x, y) with y covering x, in lexicographic order.
  Relation covers() const;

  /// Same order and unary map, new names.
  OrthoPoset renamed(std::vector<std::string> names) const;
  /// Element x of this poset becomes element perm[x] of the result.
  OrthoPoset relabeled(std::span<const Element> perm) const;

  /// Equal order, unary map, and names.
  bool operator==(const OrthoPoset&) const = default;

 private:
  OrthoPoset(std::vector<ElementSet> down, std::vector<Element> comp,
             std::vector<std::string> names);

  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Element> comp_;
  std::vector<std::string> names_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// L(A) = {x : x <= a for all a in A}; L(empty) is the universe.
ElementSet lower_cone(const OrthoPoset& p, ElementSet a);
/// U(A) = {x : a <= x for all a in A}; U(empty) is the universe.
ElementSet upper_cone(const OrthoPoset& p, ElementSet a);

/// Least element of `s` under the order of `p`, if there is one.
std::optional<Element> least_element(const OrthoPoset& p, ElementSet s);
std::optional<Element> greatest_element(const OrthoPoset& p, ElementSet s);
ElementSet minimal_elements(const OrthoPoset& p, ElementSet s);
ElementSet maximal_elements(const OrthoPoset& p, ElementSet s);

/// Supremum of A: the least element of U(A), if it exists.
std::optional<Element> supremum(const OrthoPoset& p, ElementSet a);

/// Decides the orthoposet axioms. Clauses are checked in this order, each
/// over all elements (pairs for antitonicity) in id order:
///   "involution"        x'' = x
///   "complement_lower"  L(x, x') = {0}
///   "complement_upper"  U(x, x') = {1}
///   "antitone"          x <= y implies y' <= x'
CheckResult is_orthoposet(const OrthoPoset& p);

/// Checks (L(x,y))' = U(x',y') and (U(x,y))' = L(x',y') for all pairs, then
/// the same laws for every subset A when n <= 16. Tags: "de_morgan_lower",
/// "de_morgan_upper", "de_morgan_lower_set", "de_morgan_upper_set".
CheckResult check_de_morgan(const OrthoPoset& p);

/// True iff every pair of elements has a supremum and an infimum.
bool is_lattice(const OrthoPoset& p);

}  // namespace gomplab
