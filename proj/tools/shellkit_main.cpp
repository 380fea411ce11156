// shellkit: check, convert and explore finite bounded posets, chain-edge
// labelings, atom orderings and uncrossing posets from the command line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "shellkit/fixtures.hpp"
#include "shellkit/io.hpp"
#include "shellkit/uncrossing.hpp"

using namespace shellkit;
using nlohmann::json;

namespace {

// Everything the input files can provide, loaded by extension.
struct Inputs {
  PosetPtr poset;
  RootTreePtr roots;
  std::optional<ChainEdgeLabeling> labeling;
  std::optional<ChainAtomOrdering> ordering;
  std::optional<FacetFile> facets;
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PosetError("ParseError", "cannot open " + path);
  return in;
}

Inputs load(const std::vector<std::string>& paths) {
  Inputs b;
  // Posets first so labelings/orderings can attach to the root tree.
  for (const auto& path : paths)
    if (path.ends_with(".poset")) {
      auto in = open_or_throw(path);
      b.poset = std::make_shared<const Poset>(parse_poset(in));
      b.roots = RootTree::build(b.poset);
    }
  for (const auto& path : paths) {
    if (path.ends_with(".poset")) continue;
    if (path.ends_with(".facets")) {
      auto in = open_or_throw(path);
      b.facets = parse_facets(in);
      continue;
    }
    if (!b.roots) throw PosetError("ParseError", path + " given without a .poset file");
    auto in = open_or_throw(path);
    if (path.ends_with(".labels")) b.labeling = parse_edge_labeling(in, b.roots);
    else if (path.ends_with(".chainlabels")) b.labeling = parse_chain_labeling(in, b.roots);
    else if (path.ends_with(".atoms")) b.ordering = parse_atoms(in, b.roots);
    else throw PosetError("ParseError", "unrecognized file extension: " + path);
  }
  return b;
}

const ChainEdgeLabeling& need_labeling(const Inputs& b) {
  if (!b.labeling)
    throw PosetError("ParseError", "this check needs a .labels or .chainlabels file");
  return *b.labeling;
}

ChainAtomOrdering need_ordering(const Inputs& b) {
  if (b.ordering) return *b.ordering;
  if (!b.roots) throw PosetError("ParseError", "this check needs a .poset file");
  return ChainAtomOrdering::element_order(b.roots);
}

void print_report(const CheckReport& rep, bool as_json, double ms) {
  if (as_json) {
    json j{{"schema", 1},
           {"check", rep.check},
           {"verdict", rep.pass ? "pass" : "fail"},
           {"total_failures", rep.total_failures},
           {"timings", {{"ms", ms}}}};
    j["witnesses"] = json::array();
    for (const auto& w : rep.witnesses)
      j["witnesses"].push_back({{"reason", w.reason}, {"detail", w.detail}});
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "check " << rep.check << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& w : rep.witnesses) std::cout << "  " << w.reason << ": " << w.detail << "\n";
  if (rep.total_failures > rep.witnesses.size())
    std::cout << "  (" << rep.total_failures << " failures total)\n";
}

CheckReport run_check(const std::string& kind, const Inputs& b, std::size_t cap, int jobs) {
  if (kind == "el") return check_EL(need_labeling(b), cap);
  if (kind == "cl") return check_CL(need_labeling(b), cap);
  if (kind == "ec") return check_EC(need_labeling(b), cap);
  if (kind == "cc") return check_CC(need_labeling(b), cap);
  if (kind == "tcl") return check_topological_CL(need_labeling(b), cap);
  if (kind == "ue") return check_UE(need_labeling(b), cap);
  if (kind == "sc") return check_self_consistency(need_labeling(b), cap);
  if (kind == "grao") return check_GRAO(need_ordering(b), cap);
  if (kind == "rao") return check_RAO(need_ordering(b), cap);
  if (kind == "shelling") {
    if (b.facets) return is_shelling(b.facets->facets, b.facets->order, jobs, cap);
    // Poset + labeling: shell the full order complex in lex chain order.
    const auto& L = need_labeling(b);
    auto f = order_complex_facets(L.poset(), false);
    return is_shelling(f, chains_as_facet_order(f, L.poset(), lex_chain_order(L)), jobs, cap);
  }
  throw CLI::ValidationError("check", "unknown check kind: " + kind);
}

std::ostream& output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw PosetError("ParseError", "cannot open " + path + " for writing");
  return file;
}

void emit_dot(std::ostream& out, const Poset& p,
              const std::map<std::pair<int, int>, std::string>* cover_labels) {
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int e = 0; e < p.size(); ++e) out << "  n" << e << " [label=\"" << p.name(e) << "\"];\n";
  for (auto [lo, hi] : p.cover_pairs()) {
    out << "  n" << lo << " -> n" << hi;
    if (cover_labels) {
      auto it = cover_labels->find({hi, lo});
      if (it != cover_labels->end()) out << " [label=\"" << it->second << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"finite-poset shellability toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  std::size_t witnesses = kDefaultWitnessCap;
  int jobs = 1;
  app.add_flag("--json", as_json, "structured report output");
  app.add_option("--witnesses", witnesses, "witness cap per report");
  app.add_option("--jobs", jobs, "parallel scan width where supported");

  std::string check_kind;
  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "run a checker over input files");
  check->fallthrough();
  check->add_option("kind", check_kind, "el|cl|ec|cc|tcl|ue|sc|grao|rao|shelling")->required();
  check->add_option("files", check_files, "input files (.poset/.labels/.chainlabels/.atoms/.facets)");

  std::vector<std::string> reorder_files;
  std::string out_path;
  auto* reorder_cmd = app.add_subcommand("reorder", "apply the atom reordering process");
  reorder_cmd->fallthrough();
  reorder_cmd->add_option("files", reorder_files, ".poset plus optional .atoms")->required();
  reorder_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  std::string conv_kind;
  std::vector<std::string> conv_files;
  auto* convert = app.add_subcommand("convert", "convert between orderings and labelings");
  convert->fallthrough();
  convert->add_option("kind", conv_kind, "grao-cc|rao-cc|rao-cl|tcl-grao")->required();
  convert->add_option("files", conv_files, "input files")->required();
  convert->add_option("-o,--output", out_path, "output file (default stdout)");

  std::vector<std::string> mob_files;
  bool via_descents = false, topological = false;
  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius number of the whole poset");
  mobius_cmd->fallthrough();
  mobius_cmd->add_option("files", mob_files, ".poset plus optional labeling")->required();
  mobius_cmd->add_flag("--via-descents", via_descents, "use the descending-chain census");
  mobius_cmd->add_flag("--topological", topological, "topological descents");

  int n = 2;
  bool pipeline = false, dot = false;
  auto* unc = app.add_subcommand("uncrossing", "build and verify the uncrossing poset P_n");
  unc->fallthrough();
  unc->add_option("--n", n, "number of strands")->required();
  unc->add_flag("--pipeline", pipeline, "run the seven-stage dual pipeline");
  unc->add_flag("--dot", dot, "emit the Hasse diagram as DOT");

  std::string fix_name, fix_dir = ".";
  bool fix_list = false, fix_emit = false;
  auto* fix = app.add_subcommand("fixtures", "list or emit the named examples");
  fix->fallthrough();
  fix->add_flag("--list", fix_list, "print all fixture names");
  fix->add_option("--name", fix_name, "fixture to load");
  fix->add_flag("--emit", fix_emit, "write the fixture's files");
  fix->add_option("--dir", fix_dir, "output directory for --emit");

  std::vector<std::string> dual_files;
  auto* dual_cmd = app.add_subcommand("dual", "rewrite a poset file upside down");
  dual_cmd->fallthrough();
  dual_cmd->add_option("files", dual_files, "a .poset file")->required();
  dual_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*check) {
    auto b = load(check_files);
    auto t0 = std::chrono::steady_clock::now();
    auto rep = run_check(check_kind, b, witnesses, jobs);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    print_report(rep, as_json, ms);
    return rep.pass ? 0 : 1;
  }

  if (*reorder_cmd) {
    auto b = load(reorder_files);
    auto re = reorder(need_ordering(b));
    std::ofstream file;
    emit_atoms(output(file, out_path), re);
    return 0;
  }

  if (*convert) {
    auto b = load(conv_files);
    std::ofstream file;
    auto& out = output(file, out_path);
    if (conv_kind == "grao-cc") emit_chain_labeling(out, grao_to_cc(need_ordering(b)));
    else if (conv_kind == "rao-cc") emit_chain_labeling(out, rao_to_cc(need_ordering(b)));
    else if (conv_kind == "rao-cl") emit_chain_labeling(out, rao_to_cl(need_ordering(b)));
    else if (conv_kind == "tcl-grao") emit_atoms(out, labeling_to_grao(need_labeling(b)));
    else throw CLI::ValidationError("convert", "unknown conversion: " + conv_kind);
    return 0;
  }

  if (*mobius_cmd) {
    auto b = load(mob_files);
    if (!b.poset) throw PosetError("ParseError", "mobius needs a .poset file");
    int value = via_descents
                    ? mobius_via_descents(need_labeling(b), b.poset->bottom(), b.poset->top(),
                                          topological)
                    : b.poset->mobius(b.poset->bottom(), b.poset->top());
    std::cout << "mobius(" << b.poset->name(b.poset->bottom()) << ", "
              << b.poset->name(b.poset->top()) << ") = " << value << "\n";
    return 0;
  }

  if (*unc) {
    auto P = build_uncrossing(n);
    if (dot) {
      std::cout << "// P_" << n << ", edge labels read downward\n";
      emit_dot(std::cout, *P.poset, &P.down_labels);
    }
    if (pipeline) {
      auto rep = verify_uncrossing_pipeline(n);
      if (as_json) {
        json j{{"schema", 1}, {"n", n}, {"verdict", rep.ok ? "pass" : "fail"}};
        j["stages"] = json::array();
        for (const auto& s : rep.stages)
          j["stages"].push_back(
              {{"name", s.name}, {"verdict", s.pass ? "pass" : "fail"}, {"ms", s.ms}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& s : rep.stages)
          std::cout << "stage " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << " ("
                    << s.ms << " ms)\n";
      }
      return rep.ok ? 0 : 1;
    }
    if (!dot)
      std::cout << "P_" << n << ": " << P.poset->size() << " elements, length "
                << P.poset->length() << "\n";
    return 0;
  }

  if (*fix) {
    if (fix_list) {
      for (const auto& name : fixture_names()) std::cout << name << "\n";
      return 0;
    }
    if (fix_name.empty()) throw CLI::ValidationError("fixtures", "--name or --list required");
    auto f = get_fixture(fix_name);
    if (!fix_emit) {
      std::cout << f.name << ": " << f.poset->size() << " elements"
                << (f.labeling ? ", labeled" : "") << (f.ordering ? ", ordered" : "") << "\n";
      return 0;
    }
    { std::ofstream o(fix_dir + "/" + f.name + ".poset"); emit_poset(o, *f.poset); }
    if (f.labeling) {
      std::ofstream o(fix_dir + "/" + f.name + ".labels");
      emit_edge_labeling(o, *f.labeling);
    }
    if (f.ordering) {
      std::ofstream o(fix_dir + "/" + f.name + ".atoms");
      emit_atoms(o, *f.ordering);
    }
    return 0;
  }

  // dual
  auto b = load(dual_files);
  if (!b.poset) throw PosetError("ParseError", "dual needs a .poset file");
  std::ofstream file;
  emit_poset(output(file, out_path), b.poset->dual());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
