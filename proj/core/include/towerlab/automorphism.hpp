#pragma once

#include <vector>

#include "towerlab/config.hpp"
#include "towerlab/group.hpp"
#include "towerlab/hom.hpp"

namespace towerlab {

// The automorphism group of a base group, materialized as an abstract group
// together with its realization: realization[i] is the image table of
// automorphism i on the base. Numbering is canonical: image tables sorted
// lexicographically, which places the identity automorphism at index 0.
// The group product matches composition: group->op(i, j) indexes the
// automorphism x -> realization[i][realization[j][x]] (apply j, then i).
struct AutGroup {
  GroupPtr base;
  GroupPtr group;
  std::vector<std::vector<int>> realization;

  int order() const { return group->order(); }
};

// Enumerates all automorphisms by backtracking over generator images with
// profile pruning and incremental closure. Throws CapError if the base
// order or the automorphism count exceeds limits.max_group_order.
AutGroup automorphism_group(const GroupPtr& g, const Limits& limits = {});

// The natural map pi: G -> Aut(G), g -> (x -> g x g^-1). Its kernel equals
// the center of G (verified internally) and its image is Inn(G).
Homomorphism inner_homomorphism(const AutGroup& aut);

struct CompletenessReport {
  bool complete = false;
  int center_order = 0;
  int outer_index = 0;  // |Aut(G)| / |Inn(G)|
};

// A group is complete when its center is trivial and every automorphism is
// inner, i.e. the natural map is bijective.
CompletenessReport is_complete(const GroupPtr& g, const Limits& limits = {});

}  // namespace towerlab
