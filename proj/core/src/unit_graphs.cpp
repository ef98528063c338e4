#include "towerlab/boxed.hpp"

namespace towerlab {

namespace {

// The eight asymmetric connected graphs on six vertices (there are exactly
// eight), as canonical edge lists. Six vertices is the smallest size where
// connected asymmetric graphs exist at all.
const std::vector<std::vector<std::pair<int, int>>>& unit_edge_lists() {
  static const std::vector<std::vector<std::pair<int, int>>> lists = {
      {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}},
      {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}},
      {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
      {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}},
      {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}},
      {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {2, 3}},
      {{0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}},
      {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}},
  };
  return lists;
}

}  // namespace

const ColoredGraph& unit_graph(int k) {
  static const std::vector<ColoredGraph> units = [] {
    std::vector<ColoredGraph> out;
    for (const auto& edges : unit_edge_lists())
      out.push_back(make_graph(6, {}, edges));
    return out;
  }();
  if (k < 0 || k >= static_cast<int>(units.size()))
    throw Error("unit graph index out of range (0.." +
                std::to_string(units.size() - 1) + ")");
  return units[k];
}

int unit_graph_count() {
  return static_cast<int>(unit_edge_lists().size());
}

}  // namespace towerlab
