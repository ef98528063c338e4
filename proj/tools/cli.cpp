#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "towerlab/automorphism.hpp"
#include "towerlab/boxed.hpp"
#include "towerlab/catalog.hpp"
#include "towerlab/construct.hpp"
#include "towerlab/graph.hpp"
#include "towerlab/normtower.hpp"
#include "towerlab/report.hpp"
#include "towerlab/tower.hpp"

namespace towerlab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Group specs accept either a constructor expression or file:<path> naming
// a JSON Cayley table.
GroupPtr resolve_group(const std::string& spec, const Limits& limits) {
  if (spec.rfind("file:", 0) == 0)
    return parse_group_json(read_file(spec.substr(5)));
  return construct_named(spec, limits);
}

ColoredGraph resolve_graph(const std::string& source) {
  if (source.rfind("unit:", 0) == 0) {
    const std::string k = source.substr(5);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      throw Error("unit graph wants unit:<index>");
    return unit_graph(std::atoi(k.c_str()));
  }
  return parse_graph_json(read_file(source));
}

Limits limits_from_env() {
  Limits l;
  if (const char* cap = std::getenv("TOWERLAB_MAX_ORDER")) {
    std::string s = cap;
    if (s.empty() || s.size() > 9 ||
        s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("TOWERLAB_MAX_ORDER must be a positive integer");
    int v = std::atoi(s.c_str());
    if (v < 1) throw Error("TOWERLAB_MAX_ORDER must be a positive integer");
    l.max_group_order = v;
  }
  return l;
}

IsoAssignment resolve_assignment(const BoxTree& tree,
                                 const std::string& pattern,
                                 const Limits& limits) {
  if (pattern == "all-one") return assign_all_one(tree, limits);
  if (pattern == "per-component") return assign_per_component(tree, limits);
  if (pattern == "per-slot") return assign_per_slot(tree, limits);
  if (pattern.rfind("upto-", 0) == 0) {
    const std::string b = pattern.substr(5);
    if (b.empty() || b.find_first_not_of("0123456789") != std::string::npos)
      throw Error("class pattern upto-<level> wants a number");
    return assign_up_to(tree, std::atoi(b.c_str()), limits);
  }
  throw Error("unknown class pattern '" + pattern +
              "' (all-one, upto-<level>, per-component, per-slot)");
}

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
      throw Error("index list wants comma-separated nonnegative integers");
    out.push_back(std::atoi(cur.c_str()));
  }
  if (out.empty()) throw Error("index list is empty");
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"finite-group automorphism and normalizer tower engine",
               "towerlab"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string spec;
  int max_stages = 0, max_limits = 0, vanishing = 0;
  auto* c_group = app.add_subcommand("group", "describe a group");
  c_group->add_option("spec", spec, "constructor expression or file:<path>")
      ->required();
  c_group->add_flag("--json", as_json, "emit JSON");

  std::string aut_spec;
  auto* c_aut = app.add_subcommand("aut", "automorphism group summary");
  c_aut->add_option("spec", aut_spec, "constructor expression or file:<path>")
      ->required();
  c_aut->add_flag("--json", as_json, "emit JSON");

  std::string tower_spec;
  auto* c_tower = app.add_subcommand("tower", "automorphism tower");
  c_tower->add_option("spec", tower_spec,
                      "constructor expression or file:<path>")
      ->required();
  c_tower->add_option("--max-stages", max_stages,
                      "stage budget per block (default 16)");
  c_tower->add_option("--max-limits", max_limits,
                      "limit-block budget (default 4)");
  c_tower->add_option("--vanishing", vanishing,
                      "report the vanishing spectrum up to this stage");
  c_tower->add_flag("--json", as_json, "emit JSON");

  std::string ambient_spec, sub_csv;
  auto* c_norm = app.add_subcommand("normtower", "normalizer tower");
  c_norm->add_option("--ambient", ambient_spec, "ambient group spec")
      ->required();
  c_norm
      ->add_option("--sub", sub_csv,
                   "comma-separated generator indices of the start subgroup")
      ->required();
  c_norm->add_flag("--json", as_json, "emit JSON");

  std::string fact_spec;
  auto* c_fact = app.add_subcommand(
      "fact-check",
      "check that the automorphism tower of a centerless group matches the "
      "normalizer tower of its image in the terminal group");
  c_fact->add_option("spec", fact_spec, "centerless group spec")->required();
  c_fact->add_flag("--json", as_json, "emit JSON");

  std::string graph_source;
  auto* c_gaut = app.add_subcommand("graph-aut", "graph automorphism group");
  c_gaut->add_option("source", graph_source, "graph JSON file or unit:<k>")
      ->required();
  c_gaut->add_flag("--json", as_json, "emit JSON");

  int depth = 0, wall_rows = 2;
  std::string pattern = "all-one", wall_class = "match";
  auto* c_boxed = app.add_subcommand("boxed", "boxed display summary");
  c_boxed->add_option("--depth", depth, "display depth (1..4)")->required();
  c_boxed->add_option("--classes", pattern,
                      "all-one | upto-<level> | per-component | per-slot");
  c_boxed->add_flag("--json", as_json, "emit JSON");

  auto* c_height = app.add_subcommand(
      "boxed-height", "slot normalizer tower of a boxed display");
  c_height->add_option("--depth", depth, "display depth (1..4)")->required();
  c_height->add_option("--classes", pattern,
                       "all-one | upto-<level> | per-component | per-slot");
  c_height->add_flag("--json", as_json, "emit JSON");

  auto* c_wall = app.add_subcommand(
      "wall", "boxed display extended by pre-boxed wall rows");
  c_wall->add_option("--depth", depth, "display depth (1..4)")->required();
  c_wall->add_option("--classes", pattern,
                     "all-one | upto-<level> | per-component | per-slot");
  c_wall->add_option("--wall-class", wall_class,
                     "match (reuse class 0) or distinct (fresh class)");
  c_wall->add_option("--rows", wall_rows, "wall row count (default 2)");
  c_wall->add_flag("--json", as_json, "emit JSON");

  int survey_max_order = 0, survey_stages = 8, survey_blocks = 2;
  auto* c_survey = app.add_subcommand("survey", "tower survey of the catalog");
  c_survey->add_option("--max-order", survey_max_order, "catalog order bound")
      ->required();
  c_survey->add_option("--max-stages", survey_stages,
                       "stage budget per block (default 8)");
  c_survey->add_option("--blocks", survey_blocks,
                       "limit-block budget (default 2)");
  c_survey->add_flag("--json", as_json, "emit JSON");

  std::vector<const char*> argv;
  argv.push_back("towerlab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    Limits limits = limits_from_env();

    if (*c_group) {
      GroupPtr g = resolve_group(spec, limits);
      out << render_group(GroupReport{spec, g}, as_json);
      return 0;
    }
    if (*c_aut) {
      GroupPtr g = resolve_group(aut_spec, limits);
      out << render_aut(aut_spec, automorphism_group(g, limits), as_json);
      return 0;
    }
    if (*c_tower) {
      GroupPtr g = resolve_group(tower_spec, limits);
      if (max_stages > 0) limits.max_stages_per_block = max_stages;
      if (max_limits > 0) limits.max_limit_blocks = max_limits;
      TowerRun run = run_tower(g, limits);
      if (vanishing > 0)
        out << render_vanishing(tower_spec,
                                vanishing_spectrum(run, vanishing), as_json);
      else
        out << render_tower(tower_spec, run, as_json);
      return 0;
    }
    if (*c_norm) {
      GroupPtr ambient = resolve_group(ambient_spec, limits);
      Subgroup start =
          subgroup_generated(ambient, parse_index_list(sub_csv));
      out << render_normtower(ambient_spec,
                              normalizer_tower(ambient, start), as_json);
      return 0;
    }
    if (*c_fact) {
      GroupPtr g = resolve_group(fact_spec, limits);
      out << render_fact_check(fact_spec,
                               aut_equals_normalizer_check(g, limits),
                               as_json);
      return 0;
    }
    if (*c_gaut) {
      ColoredGraph g = resolve_graph(graph_source);
      out << render_graph_aut(graph_source, g,
                              graph_automorphism_group(g, limits), as_json);
      return 0;
    }
    if (*c_boxed) {
      BoxTree tree = standard_box_tree(depth);
      BoxedBuild b =
          build_boxed(tree, resolve_assignment(tree, pattern, limits), limits);
      out << render_boxed(b, as_json);
      return 0;
    }
    if (*c_height) {
      BoxTree tree = standard_box_tree(depth);
      BoxedBuild b =
          build_boxed(tree, resolve_assignment(tree, pattern, limits), limits);
      out << render_slot_tower(b, slot_normalizer_tower(b, limits), as_json);
      return 0;
    }
    if (*c_wall) {
      BoxTree tree = standard_box_tree(depth);
      IsoAssignment assign = resolve_assignment(tree, pattern, limits);
      int cls;
      if (wall_class == "match")
        cls = 0;
      else if (wall_class == "distinct")
        cls = assign.class_count();
      else
        throw Error("--wall-class wants match or distinct");
      BoxedBuild b = build_wall(tree, assign, cls, wall_rows, limits);
      out << render_slot_tower(b, slot_normalizer_tower(b, limits), as_json);
      return 0;
    }
    if (*c_survey) {
      out << render_survey(
          survey(survey_max_order, survey_stages, survey_blocks, limits),
          as_json);
      return 0;
    }
    err << "usage: no subcommand given\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace towerlab::cli
