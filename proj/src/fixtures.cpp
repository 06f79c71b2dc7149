#include "gomplab/fixtures.hpp"

namespace gomplab::fixtures {

OrthoPoset chain2() {
  return OrthoPoset::from_relation(2, {{0, 1}}, {1, 0}, {"0", "1"});
}

OrthoPoset chain2_identity() {
  return OrthoPoset::from_relation(2, {{0, 1}}, {0, 1}, {"0", "1"});
}

OrthoPoset boolean4() {
  // 0 a a' 1
  return OrthoPoset::from_relation(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                   {3, 2, 1, 0}, {"0", "a", "a'", "1"});
}

OrthoPoset mo2() {
  // 0 a b a' b' 1
  return OrthoPoset::from_relation(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
      {5, 3, 4, 1, 2, 0}, {"0", "a", "b", "a'", "b'", "1"});
}

OrthoPoset benzene6() {
  // 0 a b a' b' 1
  return OrthoPoset::from_relation(
      6, {{0, 1}, {1, 4}, {4, 5}, {0, 2}, {2, 3}, {3, 5}},
      {5, 3, 4, 1, 2, 0}, {"0", "a", "b", "a'", "b'", "1"});
}

}  // namespace gomplab::fixtures
