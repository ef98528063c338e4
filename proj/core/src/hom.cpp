#include "towerlab/hom.hpp"

#include <algorithm>

namespace towerlab {

Homomorphism make_homomorphism(GroupPtr source, GroupPtr target,
                               std::vector<int> image) {
  if (!source || !target) throw Error("homomorphism: null endpoint");
  if (static_cast<int>(image.size()) != source->order())
    throw Error("homomorphism: image table length mismatch");
  for (int v : image)
    if (v < 0 || v >= target->order())
      throw Error("homomorphism: image out of range");
  if (image[0] != 0) throw Error("homomorphism: identity not preserved");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (image[source->op(a, b)] != target->op(image[a], image[b]))
        throw Error("homomorphism: map is not multiplicative");
  return Homomorphism{std::move(source), std::move(target), std::move(image)};
}

Homomorphism identity_hom(const GroupPtr& g) {
  std::vector<int> image(g->order());
  for (int i = 0; i < g->order(); ++i) image[i] = i;
  return Homomorphism{g, g, std::move(image)};
}

Subgroup kernel(const Homomorphism& f) {
  std::vector<int> members;
  for (int x = 0; x < f.source->order(); ++x)
    if (f.image[x] == 0) members.push_back(x);
  return Subgroup{f.source, std::move(members)};
}

Subgroup image_subgroup(const Homomorphism& f) {
  std::vector<int> members = f.image;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subgroup{f.target, std::move(members)};
}

bool is_injective(const Homomorphism& f) {
  std::vector<char> seen(f.target->order(), 0);
  for (int v : f.image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_bijective(const Homomorphism& f) {
  return f.source->order() == f.target->order() && is_injective(f);
}

Homomorphism hom_then(const Homomorphism& f, const Homomorphism& g) {
  if (f.target != g.source)
    throw Error("homomorphism composition: endpoint mismatch");
  std::vector<int> image(f.source->order());
  for (int x = 0; x < f.source->order(); ++x) image[x] = g.image[f.image[x]];
  return Homomorphism{f.source, g.target, std::move(image)};
}

Homomorphism hom_inverse(const Homomorphism& f) {
  if (!is_bijective(f)) throw Error("homomorphism inverse: not bijective");
  std::vector<int> inv(f.target->order());
  for (int x = 0; x < f.source->order(); ++x) inv[f.image[x]] = x;
  return Homomorphism{f.target, f.source, std::move(inv)};
}

}  // namespace towerlab
