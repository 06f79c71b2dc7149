#include "gomplab/structure_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace gomplab {

ParseError::ParseError(int line, std::string field, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (field.empty() ? std::string() : " (" + field + ")") + ": " + message),
      line_(line),
      field_(std::move(field)) {}

bool is_valid_element_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':' || c == '#') {
      return false;
    }
  }
  return true;
}

namespace {

struct PhysicalLine {
  int number;
  std::string text;
};

struct Field {
  int line;
  std::vector<PhysicalLine> rows;  // key-line remainder first, then continuations
};

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::set<std::string, std::less<>> kKnownFields{"name", "elements", "covers", "leq",
                                                      "comp", "bottom", "top", "join"};

std::map<std::string, Field, std::less<>> split_fields(std::string_view text) {
  std::map<std::string, Field, std::less<>> fields;
  std::string current;
  int number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(raw.front()))) {
      if (current.empty()) throw ParseError(number, "", "continuation line without a field");
      fields[current].rows.push_back({number, trim(raw)});
      continue;
    }
    const auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError(number, "", "expected 'field: value'");
    std::string key = trim(std::string_view(raw).substr(0, colon));
    if (!kKnownFields.count(key)) throw ParseError(number, key, "unknown field");
    if (fields.count(key)) throw ParseError(number, key, "field given twice");
    fields[key] = Field{number, {{number, trim(std::string_view(raw).substr(colon + 1))}}};
    current = key;
  }
  return fields;
}

class Resolver {
 public:
  explicit Resolver(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<Element>(i);
  }
  Element operator()(const std::string& name, int line, const std::string& field) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ParseError(line, field, "unknown element '" + name + "'");
    return it->second;
  }

 private:
  std::map<std::string, Element> index_;
};

Relation parse_pairs(const Field& f, const std::string& key, const Resolver& resolve) {
  Relation out;
  for (const auto& row : f.rows) {
    std::string_view rest = row.text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string chunk = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (chunk.empty()) continue;
      const auto parts = tokens(chunk);
      if (parts.size() != 2) {
        throw ParseError(row.number, key, "expected a pair of names, got '" + chunk + "'");
      }
      out.emplace_back(resolve(parts[0], row.number, key), resolve(parts[1], row.number, key));
    }
  }
  return out;
}

Element parse_single(const Field& f, const std::string& key, const Resolver& resolve) {
  std::vector<std::string> all;
  for (const auto& row : f.rows) {
    for (auto& t : tokens(row.text)) all.push_back(t);
  }
  if (all.size() != 1) throw ParseError(f.line, key, "expected exactly one element name");
  return resolve(all.front(), f.line, key);
}

const Field& require(const std::map<std::string, Field, std::less<>>& fields,
                     const std::string& key) {
  auto it = fields.find(key);
  if (it == fields.end()) throw ParseError(0, key, "missing required field");
  return it->second;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  const auto fields = split_fields(text);

  std::string label;
  if (auto it = fields.find("name"); it != fields.end()) {
    for (const auto& row : it->second.rows) {
      if (!row.text.empty()) label += (label.empty() ? "" : " ") + row.text;
    }
  }

  const Field& elements_field = require(fields, "elements");
  std::vector<std::string> names;
  for (const auto& row : elements_field.rows) {
    for (auto& t : tokens(row.text)) {
      if (!is_valid_element_name(t)) throw ParseError(row.number, "elements", "invalid name '" + t + "'");
      names.push_back(t);
    }
  }
  if (names.empty()) throw ParseError(elements_field.line, "elements", "no elements listed");
  if (names.size() > static_cast<std::size_t>(kMaxElements)) {
    throw ParseError(elements_field.line, "elements", "more than 64 elements");
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw ParseError(elements_field.line, "elements", "duplicate element name");
  }
  const Resolver resolve(names);
  const int n = static_cast<int>(names.size());

  const bool has_covers = fields.count("covers") > 0;
  const bool has_leq = fields.count("leq") > 0;
  if (has_covers && has_leq) {
    throw ParseError(fields.at("leq").line, "leq", "give either 'covers' or 'leq', not both");
  }
  Relation relation;
  if (has_covers) relation = parse_pairs(fields.at("covers"), "covers", resolve);
  if (has_leq) relation = parse_pairs(fields.at("leq"), "leq", resolve);

  const Field& comp_field = require(fields, "comp");
  std::vector<Element> comp(n, -1);
  for (auto [x, y] : parse_pairs(comp_field, "comp", resolve)) {
    if (comp[x] >= 0) {
      throw ParseError(comp_field.line, "comp", "element '" + names[x] + "' has two images");
    }
    comp[x] = y;
  }
  for (Element x = 0; x < n; ++x) {
    if (comp[x] < 0) {
      throw ParseError(comp_field.line, "comp", "element '" + names[x] + "' has no image");
    }
  }

  const Element bottom = parse_single(require(fields, "bottom"), "bottom", resolve);
  const Element top = parse_single(require(fields, "top"), "top", resolve);

  std::optional<OrthoPoset> poset;
  try {
    poset = OrthoPoset::from_relation(n, relation, comp, names);
  } catch (const StructureError& e) {
    throw ParseError(has_leq ? fields.at("leq").line : has_covers ? fields.at("covers").line : 0,
                     has_leq ? "leq" : "covers", e.what());
  }
  if (poset->bottom() != bottom) {
    throw ParseError(fields.at("bottom").line, "bottom",
                     "'" + names[bottom] + "' is not the least element");
  }
  if (poset->top() != top) {
    throw ParseError(fields.at("top").line, "top", "'" + names[top] + "' is not the greatest element");
  }

  std::optional<Directoid> directoid;
  if (auto it = fields.find("join"); it != fields.end()) {
    std::vector<Element> table;
    int rows = 0;
    for (const auto& row : it->second.rows) {
      const auto cells = tokens(row.text);
      if (cells.empty()) continue;
      if (static_cast<int>(cells.size()) != n) {
        throw ParseError(row.number, "join", "row must list " + std::to_string(n) + " names");
      }
      for (const auto& c : cells) table.push_back(resolve(c, row.number, "join"));
      ++rows;
    }
    if (rows != n) {
      throw ParseError(it->second.line, "join", "expected " + std::to_string(n) + " rows");
    }
    directoid.emplace(n, std::move(table), comp, bottom, top);
  }

  return StructureFile{std::move(label), std::move(*poset), std::move(directoid)};
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

std::string serialize_structure(const StructureFile& file) {
  const OrthoPoset& p = file.poset;
  for (const auto& nm : p.names()) {
    if (!is_valid_element_name(nm)) {
      throw StructureError("element name '" + nm + "' cannot be written to a structure file");
    }
  }
  std::ostringstream out;
  if (!file.label.empty()) out << "name: " << file.label << '\n';
  out << "elements:";
  for (const auto& nm : p.names()) out << ' ' << nm;
  out << '\n';

  auto write_pairs = [&](const char* key, const Relation& pairs) {
    out << key << ':';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0 && i % 8 == 0) out << ",\n ";
      else if (i > 0) out << ',';
      out << ' ' << p.name(pairs[i].first) << ' ' << p.name(pairs[i].second);
    }
    out << '\n';
  };
  write_pairs("covers", p.covers());
  Relation comp;
  for (Element x = 0; x < p.size(); ++x) comp.emplace_back(x, p.comp(x));
  write_pairs("comp", comp);
  out << "bottom: " << p.name(p.bottom()) << '\n';
  out << "top: " << p.name(p.top()) << '\n';
  if (file.directoid) {
    out << "join:\n";
    for (Element x = 0; x < p.size(); ++x) {
      out << ' ';
      for (Element y = 0; y < p.size(); ++y) out << ' ' << p.name(file.directoid->join(x, y));
      out << '\n';
    }
  }
  return out.str();
}

std::string serialize_structure(const OrthoPoset& poset, std::string_view label) {
  return serialize_structure(StructureFile{std::string(label), poset, std::nullopt});
}

void save_structure(const std::filesystem::path& path, const StructureFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_structure(file);
}

}  // namespace gomplab
