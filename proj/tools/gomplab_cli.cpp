// Command-line front end: loads structure files, runs checks, prints reports.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gomplab/congruence.hpp"
#include "gomplab/directoid.hpp"
#include "gomplab/dm_completion.hpp"
#include "gomplab/enumeration.hpp"
#include "gomplab/gomp_axioms.hpp"
#include "gomplab/report.hpp"
#include "gomplab/residuation.hpp"
#include "gomplab/search.hpp"
#include "gomplab/structure_io.hpp"
#include "gomplab/theorem_suite.hpp"

namespace fs = std::filesystem;
using namespace gomplab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  bool json = false;
  unsigned workers = 0;
  std::string file;
  std::string class_name;
  std::string mode = "gomp";
  std::string search_mode = "first";
  std::string emit;
  std::string predicate;
  std::string export_dir;
  int n = 0;
  int max_n = 8;
};

/// Input problems that map to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const Json& doc) {
  if (opt.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << render_text(doc);
  }
}

Directoid directoid_for(const StructureFile& f) {
  return f.directoid ? *f.directoid : assign_canonical_directoid(f.poset);
}

std::string normalize_class(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "A" || name == "class_a") return "class_A";
  if (name == "W" || name == "variety_w") return "variety_W";
  return name;
}

/// Checks that carry a witness; everything else in the predicate registry
/// is reported as a bare verdict.
Json witness_check(const std::string& cls, const StructureFile& f, bool& known) {
  const auto& names = f.poset.names();
  known = true;
  if (cls == "orthoposet") return check_json(is_orthoposet(f.poset), names);
  if (cls == "de_morgan") return check_json(check_de_morgan(f.poset), names);
  if (cls == "gomp") return check_json(is_gomp(f.poset), names);
  if (cls == "strong_gomp") return check_json(is_strong_gomp(f.poset), names);
  if (cls == "directoid") return check_json(is_directoid(directoid_for(f)), names);
  if (cls == "class_A") return check_json(in_class_A(directoid_for(f)), names);
  if (cls == "variety_W") return check_json(in_variety_W(directoid_for(f)), names);
  if (cls == "majority") return check_json(verify_majority(directoid_for(f)), names);
  if (cls == "maltsev") return check_json(verify_maltsev(directoid_for(f)), names);
  if (cls == "regularity") return check_json(verify_regularity_terms(directoid_for(f)), names);
  if (cls == "ortholattice" || cls == "oml" || cls == "nearly_oml") {
    const DMLattice lt = dm_completion(f.poset);
    if (cls == "ortholattice") return dm_check_json(lt, is_ortholattice(lt));
    if (cls == "oml") return dm_check_json(lt, is_orthomodular_lattice(lt));
    return dm_check_json(lt, is_nearly_oml(lt));
  }
  known = false;
  return {};
}

int run_check(const Options& opt) {
  const StructureFile f = load_structure(opt.file);
  const std::string cls = normalize_class(opt.class_name);
  bool known = false;
  Json result = witness_check(cls, f, known);
  if (!known) {
    const ClassPredicate* pred = find_predicate(cls);
    if (!pred) throw InputError("unknown class '" + opt.class_name + "'");
    if ((cls == "permutable" || cls == "distributive" || cls == "regular") &&
        f.poset.size() > kMaxCongruenceLatticeSize) {
      throw InputError("congruence classes need at most 12 elements");
    }
    result = Json{{"passed", pred->holds(f.poset)}};
  }
  Json doc;
  doc["structure"] = f.label.empty() ? opt.file : f.label;
  doc["class"] = cls;
  doc["result"] = result;
  emit(opt, doc);
  return result["passed"].get<bool>() ? kExitPass : kExitFail;
}

int run_residuate(const Options& opt) {
  const StructureFile f = load_structure(opt.file);
  const bool strong = opt.mode == "strong";
  const auto ops = strong ? build_MR_strong(f.poset) : build_R_gomp(f.poset);
  Json doc;
  doc["structure"] = f.label.empty() ? opt.file : f.label;
  doc["residuation"] = residuation_json(ops, strong);
  emit(opt, doc);
  const auto& r = doc["residuation"];
  const char* key = strong ? "operator_residuated" : "conditionally_operator_residuated";
  const bool ok = r[key]["passed"].get<bool>() && r["divisibility"]["passed"].get<bool>();
  return ok ? kExitPass : kExitFail;
}

int run_directoid(const Options& opt) {
  const StructureFile f = load_structure(opt.file);
  const Directoid d = directoid_for(f);
  Json doc;
  doc["structure"] = f.label.empty() ? opt.file : f.label;
  doc["source"] = f.directoid ? "file" : "canonical assignment";
  doc["directoid"] = directoid_json(f.poset, d);
  emit(opt, doc);
  const auto& r = doc["directoid"];
  return r["directoid"]["passed"].get<bool>() && r["class_A"]["passed"].get<bool>()
             ? kExitPass
             : kExitFail;
}

int run_congruence(const Options& opt) {
  const StructureFile f = load_structure(opt.file);
  if (f.poset.size() > kMaxCongruenceLatticeSize) {
    throw InputError("congruence lattices are computed for at most 12 elements");
  }
  const Directoid d = directoid_for(f);
  Json doc;
  doc["structure"] = f.label.empty() ? opt.file : f.label;
  doc["source"] = f.directoid ? "file" : "canonical assignment";
  doc["congruence"] = congruence_json(d, f.poset.names());
  emit(opt, doc);
  const auto& p = doc["congruence"]["properties"];
  return p["permutable"].get<bool>() && p["distributive"].get<bool>() &&
                 p["regular"].get<bool>()
             ? kExitPass
             : kExitFail;
}

int run_dm(const Options& opt) {
  const StructureFile f = load_structure(opt.file);
  const DMLattice lt = dm_completion(f.poset);
  Json doc;
  doc["structure"] = f.label.empty() ? opt.file : f.label;
  doc["completion"] = dm_json(lt);
  if (!opt.emit.empty()) {
    const std::string label = (f.label.empty() ? std::string("structure") : f.label) + "_dm";
    save_structure(opt.emit, StructureFile{label, dm_to_structure(lt), std::nullopt});
    doc["emitted"] = opt.emit;
  }
  emit(opt, doc);
  return doc["completion"]["orthomodular"]["passed"].get<bool>() ? kExitPass : kExitFail;
}

void export_structures(const std::string& dir, const std::vector<OrthoPoset>& found) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::string label = "n" + std::to_string(found[i].size()) + "_" + std::to_string(i);
    save_structure(fs::path(dir) / (label + ".struct"), StructureFile{label, found[i], std::nullopt});
  }
}

void check_size(int n, const char* what) {
  if (n < kMinEnumerationSize || n > kMaxEnumerationSize) {
    throw InputError(std::string(what) + " must be in 2..10");
  }
}

int run_count(const Options& opt) {
  const EnumerationOptions eo{opt.workers};
  const int lo = opt.n > 0 ? opt.n : kMinEnumerationSize;
  const int hi = opt.n > 0 ? opt.n : opt.max_n;
  check_size(lo, "--n");
  check_size(hi, "--max-n");
  Json counts = Json::object();
  std::vector<OrthoPoset> all;
  for (int n = lo; n <= hi; ++n) {
    auto found = enumerate_orthoposets(n, eo);
    counts[std::to_string(n)] = found.size();
    if (!opt.export_dir.empty()) all.insert(all.end(), found.begin(), found.end());
  }
  if (!opt.export_dir.empty()) export_structures(opt.export_dir, all);
  emit(opt, Json{{"orthoposets", counts}});
  return kExitPass;
}

int run_search(const Options& opt) {
  check_size(opt.max_n, "--max-n");
  SearchSpec spec;
  spec.max_n = opt.max_n;
  spec.predicate = opt.predicate;
  spec.mode = opt.search_mode == "all" ? SearchMode::CountAll : SearchMode::FirstWitness;
  try {
    parse_predicate(spec.predicate);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const EnumerationOptions eo{opt.workers};
  const SearchOutcome out = find_witness(spec, eo);
  Json doc;
  doc["predicate"] = opt.predicate;
  doc["searched_up_to"] = out.searched_up_to;
  if (spec.mode == SearchMode::CountAll) {
    Json counts = Json::object();
    for (auto [n, c] : out.counts) counts[std::to_string(n)] = c;
    doc["matches"] = counts;
    if (!opt.export_dir.empty()) {
      const auto formula = parse_predicate(spec.predicate);
      std::vector<OrthoPoset> found;
      for (int n = kMinEnumerationSize; n <= opt.max_n; ++n) {
        for (const auto& p : enumerate_orthoposets(n, eo)) {
          if (evaluate(formula, p)) found.push_back(p);
        }
      }
      export_structures(opt.export_dir, found);
    }
  } else {
    doc["found"] = out.witness.has_value();
    if (out.witness) {
      doc["witness"] = structure_json(*out.witness);
      if (!opt.export_dir.empty()) export_structures(opt.export_dir, {*out.witness});
    }
  }
  emit(opt, doc);
  return kExitPass;
}

int run_verify_all(const Options& opt) {
  check_size(opt.max_n, "--max-n");
  SuiteOptions so;
  so.max_n = opt.max_n;
  so.enumeration.workers = opt.workers;
  if (!opt.json) {
    so.progress = [](const CriterionResult& r) {
      std::cerr << "criterion " << r.id << ": " << (r.passed ? "pass" : "FAIL") << '\n';
    };
  }
  const auto results = run_theorem_suite(so);
  const Json doc = suite_json(results);
  emit(opt, doc);
  return doc["passed"].get<bool>() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks generalized orthomodular posets and their assigned algebras."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_option("--workers", opt.workers, "Enumeration threads (0 = all cores)");

  auto* check = app.add_subcommand("check", "Decide one class for a structure");
  check->add_option("file", opt.file, "Structure file")->required();
  check->add_option("--class", opt.class_name, "gomp, strong-gomp, orthoposet, ...")
      ->required();

  auto* residuate = app.add_subcommand("residuate", "Dump R/M tables and residuation checks");
  residuate->add_option("file", opt.file, "Structure file")->required();
  residuate->add_option("--mode", opt.mode, "gomp or strong")
      ->check(CLI::IsMember({"gomp", "strong"}));

  auto* directoid = app.add_subcommand("directoid", "Assigned directoid and class report");
  directoid->add_option("file", opt.file, "Structure file")->required();

  auto* congruence = app.add_subcommand("congruence", "Congruence lattice and properties");
  congruence->add_option("file", opt.file, "Structure file")->required();

  auto* dm = app.add_subcommand("dm", "Dedekind-MacNeille completion and classification");
  dm->add_option("file", opt.file, "Structure file")->required();
  dm->add_option("--emit", opt.emit, "Write the completion as a structure file");

  auto* count = app.add_subcommand("count", "Count orthoposets up to isomorphism");
  count->add_option("--n", opt.n, "Single size");
  count->add_option("--max-n", opt.max_n, "Count sizes 2..N (default 8)");
  count->add_option("--export", opt.export_dir, "Directory for structure files");

  auto* search = app.add_subcommand("search", "Search enumerated orthoposets");
  search->add_option("--predicate", opt.predicate, "e.g. \"gomp & !strong_gomp\"")->required();
  search->add_option("--max-n", opt.max_n, "Largest size searched (default 8)");
  search->add_option("--mode", opt.search_mode, "first or all")
      ->check(CLI::IsMember({"first", "all"}));
  search->add_option("--export", opt.export_dir, "Directory for structure files");

  auto* verify = app.add_subcommand("verify-all", "Run the theorem suite");
  verify->add_option("--max-n", opt.max_n, "Largest size (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  static const std::map<CLI::App*, std::function<int(const Options&)>> verbs = {
      {check, run_check},           {residuate, run_residuate}, {directoid, run_directoid},
      {congruence, run_congruence}, {dm, run_dm},               {count, run_count},
      {search, run_search},         {verify, run_verify_all},
  };
  try {
    for (const auto& [sub, run] : verbs) {
      if (sub->parsed()) return run(opt);
    }
  } catch (const std::runtime_error& e) {
    // Parse errors, unreadable files, bad arguments.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    // Structures that fail order validation.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  std::cerr << app.help();
  return kExitInput;
}
