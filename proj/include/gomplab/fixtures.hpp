#pragma once

#include "gomplab/ortho_poset.hpp"

/// Small reference structures used across the library and its tests.
/// Element ids follow the order in which the names are listed.
namespace gomplab::fixtures {

/// 0 < 1 with 0' = 1.
OrthoPoset chain2();
/// 0 < 1 with the identity as unary map (not an orthoposet).
OrthoPoset chain2_identity();
/// Boolean algebra 0 < a, a' < 1.
OrthoPoset boolean4();
/// Horizontal sum of two four-element Boolean blocks: 0 < a, a', b, b' < 1.
OrthoPoset mo2();
/// Benzene ring: 0 < a < b' < 1 and 0 < b < a' < 1.
OrthoPoset benzene6();

}  // namespace gomplab::fixtures
