#include "towerlab/hom.hpp"

#include "iso_search.hpp"

namespace towerlab {

std::optional<Homomorphism> find_isomorphism(const GroupPtr& g,
                                             const GroupPtr& h) {
  if (fingerprint(*g) != fingerprint(*h)) return std::nullopt;
  std::vector<int> gens = minimal_generating_set(*g);
  std::optional<std::vector<int>> found;
  detail::for_each_isomorphism(*g, *h, gens,
                               [&](const std::vector<int>& img) {
                                 found = img;
                                 return false;
                               });
  if (!found) return std::nullopt;
  return Homomorphism{g, h, std::move(*found)};
}

}  // namespace towerlab
