#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/config.hpp"
#include "towerlab/graph.hpp"

namespace towerlab {

inline constexpr int kMaxSlots = 24;

// A permutation of slot positions (graph components), fixed small size.
struct SlotPerm {
  int n = 0;
  std::array<uint8_t, kMaxSlots> img{};

  static SlotPerm identity(int n);
  SlotPerm after(const SlotPerm& first) const;  // this applied after first
  SlotPerm inverse() const;
  bool operator==(const SlotPerm&) const = default;
  bool operator<(const SlotPerm& o) const;
};

// The component layout of a boxed display of depth alpha: two bare unit
// slots, then one complete binary pairing tree per level 2..alpha with
// 2^(level-1) leaf slots, plus optional wall components (pre-boxed pairs of
// two slots each) appended at the end. Slots are numbered component-major,
// left to right.
struct BoxTree {
  int depth = 1;
  int wall_rows = 0;
  std::vector<int> component_sizes;  // leaves per component
  int slot_count = 0;

  int component_count() const {
    return static_cast<int>(component_sizes.size());
  }
  int main_component_count() const { return component_count() - wall_rows; }
  std::vector<int> component_offsets() const;
};

// depth 1..4 (5 or more would exceed the slot bound).
BoxTree standard_box_tree(int depth);

// Assignment of an isomorphism class to every slot plus one unit graph per
// class. Construction verifies: every unit is connected and rigid, units
// are pairwise non-isomorphic, and class ids are dense from 0.
struct IsoAssignment {
  std::vector<int> class_of_slot;
  std::vector<ColoredGraph> units;  // units[c] realizes class c

  int class_count() const { return static_cast<int>(units.size()); }
};

IsoAssignment make_assignment(std::vector<int> class_of_slot,
                              std::vector<ColoredGraph> units,
                              const Limits& limits = {});

// Shipped pool of eight pairwise non-isomorphic connected rigid graphs on
// six vertices. Index 0 is the default unit.
const ColoredGraph& unit_graph(int k);
int unit_graph_count();

// Canned assignments for a tree. "upto" gives slots of components at level
// <= beta the shared class 0 and each deeper component its own class;
// wall components (if any) are not covered and must be assigned by
// build_wall.
IsoAssignment assign_all_one(const BoxTree& tree, const Limits& limits = {});
IsoAssignment assign_up_to(const BoxTree& tree, int beta,
                           const Limits& limits = {});
IsoAssignment assign_per_component(const BoxTree& tree,
                                   const Limits& limits = {});
IsoAssignment assign_per_slot(const BoxTree& tree, const Limits& limits = {});

// The realized display: the disjoint-union graph, the slot ambient (the
// direct product of symmetric groups on each class of slots, represented by
// the class partition) and the wreath group W generated by one box-swap
// involution per box whose two child subtrees carry identical assignments.
struct BoxedBuild {
  BoxTree tree;
  IsoAssignment assign;
  ColoredGraph graph;
  std::vector<int> slot_vertex_offset;  // where each slot's unit begins
  unsigned long long ambient_order = 0;
  std::vector<SlotPerm> w_generators;
  std::vector<SlotPerm> w_elements;  // sorted
};

BoxedBuild build_boxed(const BoxTree& tree, const IsoAssignment& assign,
                       const Limits& limits = {});

// build_boxed on the tree extended by `wall_rows` pre-boxed pair components
// whose slots all carry wall_class. wall_class may name an existing class
// of `assign` (matching wall) or equal assign.class_count() to bind a fresh
// unit (non-matching wall). wall_rows = 0 reproduces build_boxed exactly.
BoxedBuild build_wall(const BoxTree& tree, const IsoAssignment& assign,
                      int wall_class, int wall_rows = 2,
                      const Limits& limits = {});

enum class SlotTowerStatus { complete, budget_exceeded };

// The normalizer tower of W inside the slot ambient. Each step scans the
// ambient elements that permute the orbit blocks of the current stage (a
// condition every normalizing element satisfies), so the scan is exact; a
// stage whose candidate count exceeds limits.max_slot_candidates stops the
// tower with status budget_exceeded and the stages computed so far.
struct SlotTower {
  std::vector<long long> stage_orders;
  std::vector<std::vector<SlotPerm>> stages;
  std::optional<int> height;
  SlotTowerStatus status = SlotTowerStatus::complete;
};

SlotTower slot_normalizer_tower(const BoxedBuild& build,
                                const Limits& limits = {});

// Convenience: the tower height. Throws Error if the scan budget ran out.
int boxed_tower_height(const BoxedBuild& build, const Limits& limits = {});

}  // namespace towerlab
