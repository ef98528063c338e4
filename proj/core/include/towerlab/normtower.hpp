#pragma once

#include <optional>
#include <vector>

#include "towerlab/config.hpp"
#include "towerlab/group.hpp"

namespace towerlab {

// The normalizer tower of a subgroup inside a fixed ambient group:
// N_0 = start, N_{k+1} = normalizer of N_k in the ambient. Stages grow
// strictly until the fixed point, which is the last stage stored.
// height is the least k with N_{k+1} = N_k.
struct NormalizerTower {
  GroupPtr ambient;
  std::vector<Subgroup> stages;
  int height = 0;
};

NormalizerTower normalizer_tower(const GroupPtr& ambient,
                                 const Subgroup& start);

// Cross-check that the automorphism tower of a centerless group coincides,
// stage by stage, with the normalizer tower of its image inside the
// terminal group. Requires the automorphism tower to terminate at a finite
// ordinal within the given budgets.
struct FactCheckReport {
  bool pass = false;
  int tower_height = 0;
  int normalizer_height = 0;
  std::vector<int> aut_stage_orders;
  std::vector<int> normalizer_stage_orders;
  std::optional<int> first_discrepancy;  // earliest stage whose members differ
};

FactCheckReport aut_equals_normalizer_check(const GroupPtr& g,
                                            const Limits& limits = {});

}  // namespace towerlab
