#pragma once

#include <functional>
#include <vector>

#include "towerlab/group.hpp"

// Internal backtracking engine behind find_isomorphism and
// automorphism_group. Not installed.

namespace towerlab::detail {

// Enumerates every isomorphism g -> h, presenting each as a full image
// table. Search order: for each generator in gens (which must generate g),
// candidate images are tried in ascending element order, pruned by element
// profiles and extended by incremental closure with injectivity checks, so
// complete maps are emitted in a fixed deterministic order. sink returns
// false to stop the enumeration. Requires |g| == |h|.
void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
    const std::function<bool(const std::vector<int>&)>& sink);

}  // namespace towerlab::detail
