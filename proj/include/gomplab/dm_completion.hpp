#pragma once

#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// The Dedekind-MacNeille completion {L(A) : A subset of P}, ordered by
/// inclusion, with A join B = LU(A, B), A meet B = A intersect B and
/// A* = L(A').
///
/// Elements are indexed so that the principal cone L(x) has index x; the
/// remaining cones follow sorted by membership mask.
class DMLattice {
 public:
  explicit DMLattice(OrthoPoset base);

  const OrthoPoset& base() const { return base_; }
  int size() const { return static_cast<int>(elements_.size()); }
  ElementSet element(int i) const { return elements_[i]; }
  const std::vector<ElementSet>& elements() const { return elements_; }
  /// Index of L(x).
  int embed(Element x) const { return x; }
  int index_of(ElementSet cone) const;
  bool contains(ElementSet s) const;

  int bottom() const { return embed(base_.bottom()); }
  int top() const { return embed(base_.top()); }
  bool leq(int a, int b) const { return elements_[a].is_subset_of(elements_[b]); }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size() + b]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + b]; }
  int star(int a) const { return star_[a]; }

  /// Least upper bound of a and b found by scanning the element list; used to
  /// confirm that LU(A, B) really is the lattice join.
  int least_upper_bound(int a, int b) const;

 private:
  OrthoPoset base_;
  std::vector<ElementSet> elements_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> star_;
};

/// Builds the completion from the intersection closure of the principal
/// down-sets (plus P), without enumerating subsets of P.
DMLattice dm_completion(const OrthoPoset& p);

/// star is an involution ("involution"), A meet A* = {0}
/// ("complement_meet"), A join A* = P ("complement_join"), and antitone
/// ("antitone"). Witnesses are completion indices.
CheckResult is_ortholattice(const DMLattice& lt);

/// Ortholattice, and A <= B implies B = A join (A* meet B) over all pairs of
/// completion elements ("orthomodular"; witness (A, B) as indices).
CheckResult is_orthomodular_lattice(const DMLattice& lt);

/// Ortholattice, and for every a in P and every B in the completion,
/// L(a) <= B implies B = L(a) join (B meet L(a)*) ("nearly_orthomodular";
/// witness (a, B) with a a base element and B an index).
CheckResult is_nearly_oml(const DMLattice& lt);

/// is_strong_gomp(P) == is_nearly_oml(DM(P)) ("strong_iff_nearly"), and
/// orthomodular completion => strong ("orthomodular_implies_strong").
CheckResult verify_dm_theorem(const OrthoPoset& p);

/// The completion as a structure of its own, with star as unary map.
/// Principal cones keep the base names; others are named by joining the
/// names of their maximal elements with '|'. Throws StructureError if the
/// completion has more than 64 elements.
OrthoPoset dm_to_structure(const DMLattice& lt);

}  // namespace gomplab
