#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gomplab/check_result.hpp"
#include "gomplab/congruence.hpp"
#include "gomplab/directoid.hpp"
#include "gomplab/dm_completion.hpp"
#include "gomplab/ortho_poset.hpp"
#include "gomplab/residuation.hpp"
#include "gomplab/theorem_suite.hpp"

namespace gomplab {

/// Report documents are JSON objects. Every check is rendered as
///   {"passed": bool, "condition": tag, "witness": [names], "sets": [[names]]}
/// with "condition", "witness" and "sets" present only on failure.
/// Element ids are translated to names through the universe the check ran on.
using Json = nlohmann::ordered_json;

std::vector<std::string> set_names(const std::vector<std::string>& names, ElementSet s);

Json check_json(const CheckResult& r, const std::vector<std::string>& names);
/// Same, where the witness mixes universes: the first `base_prefix` witness
/// entries are base elements, the rest index `other`. Witness sets are
/// always subsets of the base.
Json check_json(const CheckResult& r, const std::vector<std::string>& base_names,
                std::size_t base_prefix, const std::vector<std::string>& other);

Json structure_json(const OrthoPoset& p);
/// n x n matrix of cones, row x holding op(x, y).
Json cone_table_json(const OrthoPoset& p, const std::vector<ElementSet>& table);
Json residuation_json(const ResiduationOperators& ops, bool strong_mode);
Json directoid_json(const OrthoPoset& p, const Directoid& d);
Json congruence_json(const Directoid& d, const std::vector<std::string>& names);
/// A completion check: witness entries are completion elements (except the
/// base element leading a near-orthomodularity witness), sets are cones.
Json dm_check_json(const DMLattice& lt, const CheckResult& r);
Json dm_json(const DMLattice& lt);
Json suite_json(const std::vector<CriterionResult>& results);

/// Indented plain-text rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace gomplab
