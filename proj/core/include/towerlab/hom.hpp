#pragma once

#include <optional>
#include <vector>

#include "towerlab/group.hpp"

namespace towerlab {

// A group homomorphism recorded as an image table: image[x] is the index in
// *target of the image of source element x. Multiplicativity and
// image[0] == 0 are verified at construction.
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
};

Homomorphism make_homomorphism(GroupPtr source, GroupPtr target,
                               std::vector<int> image);
Homomorphism identity_hom(const GroupPtr& g);

Subgroup kernel(const Homomorphism& f);
Subgroup image_subgroup(const Homomorphism& f);
bool is_injective(const Homomorphism& f);
bool is_bijective(const Homomorphism& f);

// Pipeline composition: first f, then g. Requires f.target == g.source
// (same object, not merely isomorphic).
Homomorphism hom_then(const Homomorphism& f, const Homomorphism& g);

// Inverse of a bijective homomorphism.
Homomorphism hom_inverse(const Homomorphism& f);

// Deterministic isomorphism search: backtracking over images of the
// lexicographically first minimal generating set, candidates tried in
// ascending element order and pruned by element profiles. Returns the first
// witness found, or nullopt. For g == h (the same object) the witness is
// the identity map.
std::optional<Homomorphism> find_isomorphism(const GroupPtr& g,
                                             const GroupPtr& h);

}  // namespace towerlab
