#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "towerlab/config.hpp"
#include "towerlab/group.hpp"

namespace towerlab {

// An undirected vertex-colored graph. No self-loops or parallel edges;
// color ids are dense from 0. Edges are stored canonically: each pair as
// (u, v) with u < v, the list sorted lexicographically.
struct ColoredGraph {
  int vertex_count = 0;
  std::vector<int> colors;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const;
  bool operator==(const ColoredGraph&) const = default;
};

// Validates and canonicalizes. Throws Error on out-of-range vertices,
// self-loops, duplicate edges, color list of wrong length, or a color set
// that is not dense from 0.
ColoredGraph make_graph(int vertex_count, std::vector<int> colors,
                        std::vector<std::pair<int, int>> edges);

// The automorphism group of a graph, as an abstract group plus its action:
// vertex_action[i] is the vertex permutation of automorphism i. Numbering
// is canonical (permutations sorted lexicographically, identity first) and
// the group product matches composition, as in AutGroup.
struct GraphAutGroup {
  GroupPtr group;
  std::vector<std::vector<int>> vertex_action;

  int order() const { return group->order(); }
};

// Exact search: iterated color refinement (neighborhood color histograms)
// followed by backtracking over refined color classes. Throws CapError when
// vertex_count exceeds limits.max_graph_vertices or the group order exceeds
// limits.max_group_order.
GraphAutGroup graph_automorphism_group(const ColoredGraph& g,
                                       const Limits& limits = {});

// First color- and adjacency-preserving bijection found in deterministic
// order, or nullopt. Same refinement machinery as the automorphism search.
std::optional<std::vector<int>> graph_isomorphism(const ColoredGraph& a,
                                                  const ColoredGraph& b,
                                                  const Limits& limits = {});

// True iff the automorphism group is trivial (early exit on the first
// non-identity automorphism).
bool is_rigid(const ColoredGraph& g, const Limits& limits = {});

bool is_connected(const ColoredGraph& g);

}  // namespace towerlab
