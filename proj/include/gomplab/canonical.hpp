#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// Isomorphism-invariant encoding of a finite order with an optional unary
/// map: the down-set masks of the relabeled elements followed by the
/// relabeled unary map.
struct CanonicalCode {
  std::vector<std::uint64_t> words;
  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

struct CanonicalLabeling {
  /// Old element x becomes perm[x].
  std::vector<Element> perm;
  CanonicalCode code;
};

/// Lexicographically least code over all relabelings that respect an
/// isomorphism-invariant colour refinement (degree and neighbourhood
/// colours, the unary map, and bottom/top held at the ends). Refinement is
/// followed by individualisation of the first non-singleton cell, so the
/// result depends only on the isomorphism class.
CanonicalLabeling canonical_labeling(const OrthoPoset& p);

/// Same for a bare partial order given by its down-sets.
CanonicalLabeling canonical_order_labeling(std::span<const ElementSet> down);

/// Order- and unary-map-preserving bijection exists (names ignored).
bool isomorphic(const OrthoPoset& a, const OrthoPoset& b);

}  // namespace gomplab
