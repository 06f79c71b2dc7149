#include "gomplab/element_set.hpp"

namespace gomplab {

ElementSet::ElementSet(std::initializer_list<Element> elements) {
  for (Element x : elements) insert(x);
}

ElementSet ElementSet::from_range(const std::vector<Element>& elements) {
  ElementSet s;
  for (Element x : elements) s.insert(x);
  return s;
}

std::vector<Element> ElementSet::to_vector() const {
  return {begin(), end()};
}

}  // namespace gomplab
