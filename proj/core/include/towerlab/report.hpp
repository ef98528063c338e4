#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "towerlab/automorphism.hpp"
#include "towerlab/boxed.hpp"
#include "towerlab/catalog.hpp"
#include "towerlab/graph.hpp"
#include "towerlab/group.hpp"
#include "towerlab/normtower.hpp"
#include "towerlab/tower.hpp"

// Serialization and report rendering. All emitters are deterministic:
// object keys appear in insertion order, arrays in a stated canonical
// order, and runs over equal inputs produce byte-identical output.

namespace towerlab {

// Group file format: {"order": n, "table": [[..]..], "names": [..]?}.
// Accepts the same validation rules as from_cayley_table.
GroupPtr parse_group_json(const std::string& text);
std::string group_to_json(const FiniteGroup& g);

// Graph file format: {"vertices": n, "edges": [[u,v]..], "colors": [..]?}.
ColoredGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const ColoredGraph& g);

struct GroupReport {
  std::string spec;
  GroupPtr group;
};

std::string render_group(const GroupReport& r, bool json);
std::string render_aut(const std::string& spec, const AutGroup& aut,
                       bool json);
std::string render_tower(const std::string& spec, const TowerRun& run,
                         bool json);
std::string render_vanishing(const std::string& spec,
                             const VanishingReport& rep, bool json);
std::string render_normtower(const std::string& ambient_spec,
                             const NormalizerTower& t, bool json);
std::string render_fact_check(const std::string& spec,
                              const FactCheckReport& r, bool json);
std::string render_graph_aut(const std::string& source, const ColoredGraph& g,
                             const GraphAutGroup& aut, bool json);
std::string render_boxed(const BoxedBuild& build, bool json);
std::string render_slot_tower(const BoxedBuild& build, const SlotTower& t,
                              bool json);
std::string render_survey(const std::vector<SurveyRow>& rows, bool json);

}  // namespace towerlab
