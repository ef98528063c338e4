#include "towerlab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace towerlab {

using json = nlohmann::ordered_json;

namespace {

std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("json: malformed document");
  return j;
}

std::vector<int> sorted_orders(const FiniteGroup& g) {
  std::vector<int> v;
  for (int x = 0; x < g.order(); ++x) v.push_back(g.element_order(x));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<int> v;
  for (int x = 0; x < g.order(); ++x) v.push_back(g.class_size(x));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

GroupPtr parse_group_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error("group json: wants an object with 'order' and 'table'");
  if (!j["order"].is_number_integer())
    throw Error("group json: 'order' must be an integer");
  int order = j["order"].get<int>();
  if (!j["table"].is_array())
    throw Error("group json: 'table' must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw Error("group json: table row must be an array");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error("group json: table entry must be an integer");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (static_cast<int>(table.size()) != order)
    throw Error("group json: 'order' disagrees with the table size");
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array())
      throw Error("group json: 'names' must be an array");
    for (const auto& v : j["names"]) {
      if (!v.is_string()) throw Error("group json: names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  return from_cayley_table(table, names);
}

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  json rows = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.op(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (g.has_names()) j["names"] = g.names();
  return finish(j);
}

ColoredGraph parse_graph_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("graph json: wants an object with 'vertices' and 'edges'");
  if (!j["vertices"].is_number_integer())
    throw Error("graph json: 'vertices' must be an integer");
  int n = j["vertices"].get<int>();
  if (!j["edges"].is_array())
    throw Error("graph json: 'edges' must be an array of pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error("graph json: edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<int> colors;
  if (j.contains("colors")) {
    if (!j["colors"].is_array())
      throw Error("graph json: 'colors' must be an array");
    for (const auto& v : j["colors"]) {
      if (!v.is_number_integer())
        throw Error("graph json: colors must be integers");
      colors.push_back(v.get<int>());
    }
  }
  return make_graph(n, std::move(colors), std::move(edges));
}

std::string graph_to_json(const ColoredGraph& g) {
  json j;
  j["vertices"] = g.vertex_count;
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  bool all_zero = std::all_of(g.colors.begin(), g.colors.end(),
                              [](int c) { return c == 0; });
  if (!all_zero) j["colors"] = g.colors;
  return finish(j);
}

std::string render_group(const GroupReport& r, bool as_json) {
  const FiniteGroup& g = *r.group;
  if (as_json) {
    json j;
    j["spec"] = r.spec;
    j["order"] = g.order();
    j["abelian"] = g.abelian();
    j["center_order"] = static_cast<int>(g.center_members().size());
    j["element_orders"] = sorted_orders(g);
    j["class_sizes"] = sorted_class_sizes(g);
    j["minimal_generators"] = minimal_generating_set(g);
    return finish(j);
  }
  std::ostringstream out;
  out << "group: " << r.spec << "\n";
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (g.abelian() ? "yes" : "no") << "\n";
  out << "center_order: " << g.center_members().size() << "\n";
  out << "element_orders: " << join(sorted_orders(g)) << "\n";
  out << "class_sizes: " << join(sorted_class_sizes(g)) << "\n";
  out << "minimal_generators: " << join(minimal_generating_set(g)) << "\n";
  return out.str();
}

std::string render_aut(const std::string& spec, const AutGroup& aut,
                       bool as_json) {
  const int center = static_cast<int>(aut.base->center_members().size());
  const int inner = aut.base->order() / center;
  const int outer_index = aut.order() / inner;
  if (as_json) {
    json j;
    j["spec"] = spec;
    j["base_order"] = aut.base->order();
    j["aut_order"] = aut.order();
    j["center_order"] = center;
    j["inner_order"] = inner;
    j["outer_index"] = outer_index;
    j["complete"] = center == 1 && outer_index == 1;
    return finish(j);
  }
  std::ostringstream out;
  out << "spec: " << spec << "\n";
  out << "base_order: " << aut.base->order() << "\n";
  out << "aut_order: " << aut.order() << "\n";
  out << "center_order: " << center << "\n";
  out << "inner_order: " << inner << "\n";
  out << "outer_index: " << outer_index << "\n";
  out << "complete: " << (center == 1 && outer_index == 1 ? "yes" : "no")
      << "\n";
  return out.str();
}

namespace {

json tower_blocks_json(const TowerRun& run) {
  json blocks = json::array();
  for (size_t bi = 0; bi < run.blocks.size(); ++bi) {
    const TowerBlock& b = run.blocks[bi];
    json jb;
    jb["base"] = Ordinal{static_cast<int>(bi), 0}.to_string();
    std::vector<int> orders;
    for (const GroupPtr& st : b.stages) orders.push_back(st->order());
    jb["stage_orders"] = orders;
    if (b.period)
      jb["period"] = json::array({b.period->n, b.period->m});
    else
      jb["period"] = nullptr;
    if (b.colimit)
      jb["colimit_order"] = b.colimit->group->order();
    else
      jb["colimit_order"] = nullptr;
    blocks.push_back(std::move(jb));
  }
  return blocks;
}

}  // namespace

std::string render_tower(const std::string& spec, const TowerRun& run,
                         bool as_json) {
  if (as_json) {
    json j;
    j["spec"] = spec;
    j["status"] = to_string(run.status);
    if (run.termination) {
      j["termination"] = run.termination->to_string();
      j["terminal_order"] = run.stage(*run.termination)->order();
    } else {
      j["termination"] = nullptr;
      j["terminal_order"] = nullptr;
    }
    j["blocks"] = tower_blocks_json(run);
    return finish(j);
  }
  std::ostringstream out;
  out << "tower: " << spec << "\n";
  out << "status: " << to_string(run.status) << "\n";
  out << "termination: "
      << (run.termination ? run.termination->to_string() : "-") << "\n";
  for (size_t bi = 0; bi < run.blocks.size(); ++bi) {
    const TowerBlock& b = run.blocks[bi];
    std::vector<int> orders;
    for (const GroupPtr& st : b.stages) orders.push_back(st->order());
    out << "block " << bi << " (base "
        << Ordinal{static_cast<int>(bi), 0}.to_string()
        << "): orders " << join(orders);
    if (b.period)
      out << "  period (" << b.period->n << "," << b.period->m << ")";
    if (b.colimit) out << "  colimit_order " << b.colimit->group->order();
    out << "\n";
  }
  return out.str();
}

std::string render_vanishing(const std::string& spec,
                             const VanishingReport& rep, bool as_json) {
  if (as_json) {
    json j;
    j["spec"] = spec;
    j["horizon"] = rep.horizon;
    json rows = json::array();
    for (const VanishingRow& r : rep.rows) {
      json jr;
      jr["stage"] = r.stage;
      jr["f"] = r.f;
      json members = json::array();
      for (auto [elem, s] : r.members)
        members.push_back(json::array({elem, s}));
      jr["members"] = std::move(members);
      rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return finish(j);
  }
  std::ostringstream out;
  out << "vanishing: " << spec << "\n";
  out << "horizon: " << rep.horizon << "\n";
  for (const VanishingRow& r : rep.rows) {
    out << "stage " << r.stage << ": f=" << r.f << " members";
    for (auto [elem, s] : r.members) out << " " << elem << "@" << s;
    out << "\n";
  }
  return out.str();
}

std::string render_normtower(const std::string& ambient_spec,
                             const NormalizerTower& t, bool as_json) {
  std::vector<int> orders;
  for (const Subgroup& s : t.stages) orders.push_back(s.order());
  if (as_json) {
    json j;
    j["ambient"] = ambient_spec;
    j["ambient_order"] = t.ambient->order();
    j["height"] = t.height;
    j["stage_orders"] = orders;
    json stages = json::array();
    for (const Subgroup& s : t.stages) stages.push_back(s.members);
    j["stages"] = std::move(stages);
    return finish(j);
  }
  std::ostringstream out;
  out << "normalizer tower in: " << ambient_spec << "\n";
  out << "ambient_order: " << t.ambient->order() << "\n";
  out << "height: " << t.height << "\n";
  out << "stage_orders: " << join(orders) << "\n";
  return out.str();
}

std::string render_fact_check(const std::string& spec,
                              const FactCheckReport& r, bool as_json) {
  if (as_json) {
    json j;
    j["spec"] = spec;
    j["pass"] = r.pass;
    j["tower_height"] = r.tower_height;
    j["normalizer_height"] = r.normalizer_height;
    j["aut_stage_orders"] = r.aut_stage_orders;
    j["normalizer_stage_orders"] = r.normalizer_stage_orders;
    if (r.first_discrepancy)
      j["first_discrepancy"] = *r.first_discrepancy;
    else
      j["first_discrepancy"] = nullptr;
    return finish(j);
  }
  std::ostringstream out;
  out << "fact-check: " << spec << "\n";
  out << "pass: " << (r.pass ? "yes" : "no") << "\n";
  out << "tower_height: " << r.tower_height << "\n";
  out << "normalizer_height: " << r.normalizer_height << "\n";
  out << "aut_stage_orders: " << join(r.aut_stage_orders) << "\n";
  out << "normalizer_stage_orders: " << join(r.normalizer_stage_orders)
      << "\n";
  if (r.first_discrepancy)
    out << "first_discrepancy: " << *r.first_discrepancy << "\n";
  return out.str();
}

std::string render_graph_aut(const std::string& source, const ColoredGraph& g,
                             const GraphAutGroup& aut, bool as_json) {
  // Vertex orbits under the automorphism group, each sorted, listed by
  // least member.
  std::vector<int> parent(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& p : aut.vertex_action)
    for (int v = 0; v < g.vertex_count; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> orbit_map;
  for (int v = 0; v < g.vertex_count; ++v) orbit_map[find(v)].push_back(v);
  std::vector<std::vector<int>> orbits;
  for (auto& [r, members] : orbit_map) orbits.push_back(std::move(members));

  if (as_json) {
    json j;
    j["source"] = source;
    j["vertices"] = g.vertex_count;
    j["edge_count"] = static_cast<int>(g.edges.size());
    j["aut_order"] = aut.order();
    j["rigid"] = aut.order() == 1;
    j["orbits"] = orbits;
    return finish(j);
  }
  std::ostringstream out;
  out << "graph: " << source << "\n";
  out << "vertices: " << g.vertex_count << "\n";
  out << "edge_count: " << g.edges.size() << "\n";
  out << "aut_order: " << aut.order() << "\n";
  out << "rigid: " << (aut.order() == 1 ? "yes" : "no") << "\n";
  out << "orbits:";
  for (const auto& o : orbits) out << " [" << join(o) << "]";
  out << "\n";
  return out.str();
}

namespace {

json boxed_json(const BoxedBuild& b) {
  json j;
  j["depth"] = b.tree.depth;
  j["wall_rows"] = b.tree.wall_rows;
  j["component_sizes"] = b.tree.component_sizes;
  j["slot_count"] = b.tree.slot_count;
  j["class_of_slot"] = b.assign.class_of_slot;
  j["class_count"] = b.assign.class_count();
  j["graph_vertices"] = b.graph.vertex_count;
  j["graph_edges"] = static_cast<int>(b.graph.edges.size());
  j["ambient_order"] = b.ambient_order;
  j["w_order"] = static_cast<long long>(b.w_elements.size());
  j["w_generators"] = static_cast<int>(b.w_generators.size());
  return j;
}

void boxed_text(std::ostringstream& out, const BoxedBuild& b) {
  out << "depth: " << b.tree.depth << "\n";
  out << "wall_rows: " << b.tree.wall_rows << "\n";
  out << "component_sizes: " << join(b.tree.component_sizes) << "\n";
  out << "slot_count: " << b.tree.slot_count << "\n";
  out << "class_of_slot: " << join(b.assign.class_of_slot) << "\n";
  out << "graph_vertices: " << b.graph.vertex_count << "\n";
  out << "ambient_order: " << b.ambient_order << "\n";
  out << "w_order: " << b.w_elements.size() << "\n";
  out << "w_generators: " << b.w_generators.size() << "\n";
}

}  // namespace

std::string render_boxed(const BoxedBuild& build, bool as_json) {
  if (as_json) return finish(boxed_json(build));
  std::ostringstream out;
  out << "boxed display\n";
  boxed_text(out, build);
  return out.str();
}

std::string render_slot_tower(const BoxedBuild& build, const SlotTower& t,
                              bool as_json) {
  if (as_json) {
    json j;
    j["display"] = boxed_json(build);
    j["stage_orders"] = t.stage_orders;
    if (t.height)
      j["height"] = *t.height;
    else
      j["height"] = nullptr;
    j["status"] = t.status == SlotTowerStatus::complete ? "complete"
                                                        : "budget-exceeded";
    return finish(j);
  }
  std::ostringstream out;
  out << "slot normalizer tower\n";
  boxed_text(out, build);
  out << "stage_orders: " << join_ll(t.stage_orders) << "\n";
  out << "height: " << (t.height ? std::to_string(*t.height) : "-") << "\n";
  out << "status: "
      << (t.status == SlotTowerStatus::complete ? "complete"
                                                : "budget-exceeded")
      << "\n";
  return out.str();
}

std::string render_survey(const std::vector<SurveyRow>& rows, bool as_json) {
  if (as_json) {
    json j;
    j["count"] = static_cast<int>(rows.size());
    json arr = json::array();
    for (const SurveyRow& r : rows) {
      json jr;
      jr["spec"] = r.spec;
      jr["order"] = r.order;
      jr["center_order"] = r.center_order;
      jr["status"] = to_string(r.status);
      jr["termination"] =
          r.termination ? json(r.termination->to_string()) : json(nullptr);
      jr["centerless_onset"] =
          r.centerless_onset ? json(*r.centerless_onset) : json(nullptr);
      jr["stage_orders"] = r.stage_orders;
      json periods = json::array();
      for (auto [n, m] : r.periods) periods.push_back(json::array({n, m}));
      jr["periods"] = std::move(periods);
      arr.push_back(std::move(jr));
    }
    j["rows"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream out;
  out << "survey (" << rows.size() << " groups)\n";
  for (const SurveyRow& r : rows) {
    out << r.spec << ": order " << r.order << ", center " << r.center_order
        << ", " << to_string(r.status);
    if (r.termination) out << ", terminates " << r.termination->to_string();
    out << ", stages";
    for (const auto& blk : r.stage_orders) out << " [" << join(blk) << "]";
    if (!r.periods.empty()) {
      out << ", periods";
      for (auto [n, m] : r.periods) out << " (" << n << "," << m << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace towerlab
