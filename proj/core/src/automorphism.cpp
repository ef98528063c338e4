#include "towerlab/automorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "iso_search.hpp"

namespace towerlab {

AutGroup automorphism_group(const GroupPtr& g, const Limits& limits) {
  if (g->order() > limits.max_group_order)
    throw CapError("automorphism group: base order " +
                   std::to_string(g->order()) + " exceeds cap " +
                   std::to_string(limits.max_group_order));

  std::vector<int> gens = minimal_generating_set(*g);
  std::vector<std::vector<int>> autos;
  bool overflow = false;
  detail::for_each_isomorphism(
      *g, *g, gens, [&](const std::vector<int>& img) {
        if (static_cast<int>(autos.size()) == limits.max_group_order) {
          overflow = true;
          return false;
        }
        autos.push_back(img);
        return true;
      });
  if (overflow)
    throw CapError("automorphism group: count exceeds cap " +
                   std::to_string(limits.max_group_order));

  std::sort(autos.begin(), autos.end());
  const int n_aut = static_cast<int>(autos.size());

  // The composition table is keyed by generator images: an automorphism is
  // determined by where it sends the generators.
  auto key_of = [&](const std::vector<int>& table) {
    std::vector<int> key(gens.size());
    for (size_t t = 0; t < gens.size(); ++t) key[t] = table[gens[t]];
    return key;
  };
  std::map<std::vector<int>, int> index_by_key;
  for (int i = 0; i < n_aut; ++i) index_by_key[key_of(autos[i])] = i;

  std::vector<int> flat(static_cast<size_t>(n_aut) * n_aut);
  std::vector<int> key(gens.size());
  for (int i = 0; i < n_aut; ++i)
    for (int j = 0; j < n_aut; ++j) {
      for (size_t t = 0; t < gens.size(); ++t)
        key[t] = autos[i][autos[j][gens[t]]];
      auto it = index_by_key.find(key);
      if (it == index_by_key.end())
        throw Error("automorphism group: composition fell outside the set");
      flat[static_cast<size_t>(i) * n_aut + j] = it->second;
    }

  AutGroup out;
  out.base = g;
  out.group = FiniteGroup::trusted(std::move(flat), n_aut);
  out.realization = std::move(autos);
  return out;
}

Homomorphism inner_homomorphism(const AutGroup& aut) {
  const FiniteGroup& b = *aut.base;
  std::vector<int> image(b.order());
  std::vector<int> conj_table(b.order());
  for (int x = 0; x < b.order(); ++x) {
    for (int y = 0; y < b.order(); ++y) conj_table[y] = b.conj(x, y);
    auto it = std::lower_bound(aut.realization.begin(), aut.realization.end(),
                               conj_table);
    if (it == aut.realization.end() || *it != conj_table)
      throw Error("inner homomorphism: conjugation is not in the realization");
    image[x] = static_cast<int>(it - aut.realization.begin());
  }
  Homomorphism f = make_homomorphism(aut.base, aut.group, std::move(image));
  if (kernel(f).members != b.center_members())
    throw Error("inner homomorphism: kernel differs from the center");
  return f;
}

CompletenessReport is_complete(const GroupPtr& g, const Limits& limits) {
  AutGroup aut = automorphism_group(g, limits);
  CompletenessReport r;
  r.center_order = static_cast<int>(g->center_members().size());
  int inner_order = g->order() / r.center_order;
  r.outer_index = aut.order() / inner_order;
  r.complete = r.center_order == 1 && r.outer_index == 1;
  return r;
}

}  // namespace towerlab
