#include "gomplab/report.hpp"

#include <sstream>

#include "gomplab/gomp_axioms.hpp"

namespace gomplab {

std::vector<std::string> set_names(const std::vector<std::string>& names, ElementSet s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(names[x]);
  return out;
}

Json check_json(const CheckResult& r, const std::vector<std::string>& names) {
  return check_json(r, names, r.witness.size(), names);
}

Json check_json(const CheckResult& r, const std::vector<std::string>& base_names,
                std::size_t base_prefix, const std::vector<std::string>& other) {
  Json j;
  j["passed"] = r.passed;
  if (r.passed) return j;
  j["condition"] = r.condition_tag;
  Json witness = Json::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    witness.push_back(i < base_prefix ? base_names[r.witness[i]] : other[r.witness[i]]);
  }
  j["witness"] = witness;
  if (!r.witness_sets.empty()) {
    Json sets = Json::array();
    for (ElementSet s : r.witness_sets) sets.push_back(set_names(base_names, s));
    j["sets"] = sets;
  }
  return j;
}

Json structure_json(const OrthoPoset& p) {
  Json j;
  j["size"] = p.size();
  j["elements"] = p.names();
  Json covers = Json::array();
  for (auto [x, y] : p.covers()) covers.push_back({p.name(x), p.name(y)});
  j["covers"] = covers;
  Json comp = Json::object();
  for (Element x = 0; x < p.size(); ++x) comp[p.name(x)] = p.name(p.comp(x));
  j["comp"] = comp;
  j["bottom"] = p.name(p.bottom());
  j["top"] = p.name(p.top());
  return j;
}

Json cone_table_json(const OrthoPoset& p, const std::vector<ElementSet>& table) {
  const int n = p.size();
  Json rows = Json::object();
  for (Element x = 0; x < n; ++x) {
    Json row = Json::object();
    for (Element y = 0; y < n; ++y) {
      row[p.name(y)] = set_names(p.names(), table[static_cast<std::size_t>(x) * n + y]);
    }
    rows[p.name(x)] = row;
  }
  return rows;
}

Json residuation_json(const ResiduationOperators& ops, bool strong_mode) {
  const auto& names = ops.base.names();
  Json j;
  j["mode"] = strong_mode ? "strong" : "gomp";
  if (ops.conjunction) j["M"] = cone_table_json(ops.base, *ops.conjunction);
  j["R"] = cone_table_json(ops.base, ops.implication);
  if (strong_mode) {
    j["operator_residuated"] = check_json(is_operator_residuated(ops), names);
    j["m_commutative"] = conjunction_is_commutative(ops);
  } else {
    j["conditionally_operator_residuated"] =
        check_json(is_conditionally_operator_residuated(ops), names);
  }
  j["divisibility"] = check_json(satisfies_operator_divisibility(ops), names);
  j["gomp"] = check_json(is_gomp(ops.base), names);
  j["strong_gomp"] = check_json(is_strong_gomp(ops.base), names);
  return j;
}

namespace {

std::vector<std::string> directoid_names(const OrthoPoset& p, const Directoid& d) {
  if (p.size() == d.size()) return p.names();
  std::vector<std::string> names;
  for (int i = 0; i < d.size(); ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

Json directoid_json(const OrthoPoset& p, const Directoid& d) {
  const auto names = directoid_names(p, d);
  const int n = d.size();
  Json j;
  Json table = Json::object();
  for (Element x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Element y = 0; y < n; ++y) row.push_back(names[d.join(x, y)]);
    table[names[x]] = row;
  }
  j["join"] = table;
  j["assigned_to_poset"] = is_assigned_to(d, p);
  j["directoid"] = check_json(is_directoid(d), names);
  const auto report = theorem_characterization_report(d);
  j["condition_i"] = check_json(report.condition_i, names);
  j["condition_ii"] = check_json(report.condition_ii, names);
  j["condition_iii"] = check_json(report.condition_iii, names);
  j["condition_iv"] = check_json(report.condition_iv, names);
  j["class_A"] = check_json(in_class_A(d), names);
  j["variety_W"] = check_json(in_variety_W(d), names);
  return j;
}

Json congruence_json(const Directoid& d, const std::vector<std::string>& names) {
  const auto props = direct_congruence_properties(d);
  auto blocks_of = [&](const Partition& q) {
    Json blocks = Json::array();
    for (ElementSet b : q.blocks()) blocks.push_back(set_names(names, b));
    return blocks;
  };
  auto witness = [&](const std::vector<std::size_t>& idx) {
    Json w = Json::array();
    for (std::size_t i : idx) w.push_back(blocks_of(props.lattice[i]));
    return w;
  };
  Json j;
  Json lattice = Json::array();
  for (const auto& q : props.lattice) lattice.push_back(blocks_of(q));
  j["congruences"] = lattice;
  j["count"] = props.lattice.size();
  Json prop;
  prop["permutable"] = props.permutable;
  if (!props.permutable) prop["permutable_witness"] = witness(props.permutable_witness);
  prop["distributive"] = props.distributive;
  if (!props.distributive) prop["distributive_witness"] = witness(props.distributive_witness);
  prop["regular"] = props.regular;
  if (!props.regular) {
    prop["regular_witness"] = witness(props.regular_witness);
    if (props.regular_element) prop["regular_element"] = names[*props.regular_element];
  }
  j["properties"] = prop;
  Json terms;
  terms["majority"] = check_json(verify_majority(d), names);
  terms["maltsev"] = check_json(verify_maltsev(d), names);
  terms["regularity"] = check_json(verify_regularity_terms(d), names);
  j["terms"] = terms;
  return j;
}

Json dm_check_json(const DMLattice& lt, const CheckResult& r) {
  const auto dm_names = dm_to_structure(lt).names();
  const std::size_t base_prefix = r.condition_tag == "nearly_orthomodular" ? 1 : 0;
  return check_json(r, lt.base().names(), base_prefix, dm_names);
}

Json dm_json(const DMLattice& lt) {
  const OrthoPoset s = dm_to_structure(lt);
  const auto& base_names = lt.base().names();
  Json j;
  j["size"] = lt.size();
  Json elements = Json::array();
  for (int i = 0; i < lt.size(); ++i) {
    elements.push_back({{"name", s.name(i)}, {"cone", set_names(base_names, lt.element(i))}});
  }
  j["elements"] = elements;
  j["structure"] = structure_json(s);
  j["ortholattice"] = dm_check_json(lt, is_ortholattice(lt));
  j["orthomodular"] = dm_check_json(lt, is_orthomodular_lattice(lt));
  j["nearly_orthomodular"] = dm_check_json(lt, is_nearly_oml(lt));
  j["strong_gomp"] = check_json(is_strong_gomp(lt.base()), base_names);
  return j;
}

Json suite_json(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed},
                   {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"criteria", arr}, {"passed", all}};
}

namespace {

bool is_scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured() && !is_scalar_list(e)) return false;
  }
  return true;
}

std::string inline_form(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_array()) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ", ";
      out += inline_form(e);
      first = false;
    }
    return out + "}";
  }
  return j.dump();
}

void render(const Json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_list(value))) {
        out << pad << key << ":\n";
        render(value, depth + 1, out);
      } else {
        out << pad << key << ": " << inline_form(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        render(e, depth + 1, out);
      } else {
        out << pad << "- " << inline_form(e) << '\n';
      }
    }
  } else {
    out << pad << inline_form(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace gomplab
