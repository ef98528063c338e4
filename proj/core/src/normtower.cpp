#include "towerlab/normtower.hpp"

#include <algorithm>

#include "towerlab/hom.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

NormalizerTower normalizer_tower(const GroupPtr& ambient,
                                 const Subgroup& start) {
  if (start.parent != ambient)
    throw Error("normalizer tower: start is not a subgroup of the ambient group");
  Subgroup cur = as_subgroup(ambient, start.members);  // re-validates closure
  NormalizerTower t;
  t.ambient = ambient;
  t.stages.push_back(cur);
  while (true) {
    Subgroup next = normalizer_in(ambient, t.stages.back());
    if (next.members == t.stages.back().members) break;
    t.stages.push_back(std::move(next));
  }
  t.height = static_cast<int>(t.stages.size()) - 1;
  return t;
}

FactCheckReport aut_equals_normalizer_check(const GroupPtr& g,
                                            const Limits& limits) {
  if (g->center_members().size() != 1)
    throw Error("fact check: the group must be centerless");
  TowerRun run = run_tower(g, limits);
  if (run.status != TowerStatus::terminated)
    throw Error("fact check: tower did not terminate (" +
                to_string(run.status) + ")");
  if (run.termination->limit_part != 0)
    throw Error("fact check: tower terminated beyond the finite stages");
  const int term = run.termination->finite_part;
  const TowerBlock& b = run.blocks[0];
  const GroupPtr& terminal = b.stages[term];

  FactCheckReport r;
  r.tower_height = term;
  std::vector<Subgroup> images;
  for (int t = 0; t <= term; ++t) {
    r.aut_stage_orders.push_back(b.stages[t]->order());
    images.push_back(
        image_subgroup(compose_maps(run, Ordinal{0, t}, Ordinal{0, term})));
  }

  NormalizerTower nt = normalizer_tower(terminal, images[0]);
  r.normalizer_height = nt.height;
  for (const Subgroup& s : nt.stages)
    r.normalizer_stage_orders.push_back(s.order());

  const int common = std::min(static_cast<int>(nt.stages.size()),
                              static_cast<int>(images.size()));
  for (int k = 0; k < common && !r.first_discrepancy; ++k)
    if (nt.stages[k].members != images[k].members) r.first_discrepancy = k;
  r.pass = !r.first_discrepancy && nt.height == term;
  return r;
}

}  // namespace towerlab
