#pragma once

#include <cstddef>
#include <vector>

#include "gomplab/ortho_poset.hpp"

namespace gomplab {

inline constexpr int kMinEnumerationSize = 2;
inline constexpr int kMaxEnumerationSize = 10;

struct EnumerationOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// One representative of every isomorphism class of n-element orthoposets,
/// in canonical labeling (bottom is 0, top is n-1) and sorted by canonical
/// code. Middle elements are named a, a', b, b', ... in id order.
///
/// Generation: unlabeled posets on the n-2 middle elements, then every
/// fixed-point-free involution of the middle that reverses the order,
/// filtered by the orthoposet axioms and deduplicated by canonical code.
/// The output does not depend on the worker count.
/// Throws std::out_of_range unless 2 <= n <= 10.
std::vector<OrthoPoset> enumerate_orthoposets(int n, const EnumerationOptions& options = {});

/// Unlabeled partial orders on m elements (0 <= m <= 8), each as canonical
/// down-sets, sorted by canonical code. Built by adding a new maximal
/// element above every order ideal of each (m-1)-element order.
std::vector<std::vector<ElementSet>> enumerate_posets(int m, const EnumerationOptions& options = {});

}  // namespace gomplab
