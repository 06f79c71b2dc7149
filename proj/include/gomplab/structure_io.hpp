#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gomplab/directoid.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// One structure per file, optionally with a join table for a directoid on
/// the same universe.
///
///     # benzene ring
///     name: o6
///     elements: 0 a b a' b' 1
///     covers: 0 a, 0 b, a b', b a', a' 1, b' 1
///     comp: 0 1, a a', b b', a' a, b' b, 1 0
///     bottom: 0
///     top: 1
///     join:
///       0 a b a' b' 1
///       ...            (n rows of n names, row x holds x join y)
///
/// `leq` may replace `covers`; either way the order is the reflexive-
/// transitive closure of the listed pairs. `comp` must give every element
/// exactly one image. Lines starting with whitespace continue the previous
/// field; '#' starts a comment. Names may not contain whitespace, ',', ':'
/// or '#'.
struct StructureFile {
  std::string label;
  OrthoPoset poset;
  std::optional<Directoid> directoid;

  bool operator==(const StructureFile&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::filesystem::path& path);

/// Canonical text form: covers in lexicographic order, comp for every
/// element, join block when a directoid is attached.
std::string serialize_structure(const StructureFile& file);
std::string serialize_structure(const OrthoPoset& poset, std::string_view label = {});
void save_structure(const std::filesystem::path& path, const StructureFile& file);

bool is_valid_element_name(std::string_view name);

}  // namespace gomplab
