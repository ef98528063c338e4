#include "towerlab/boxed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

#include "towerlab/error.hpp"

namespace towerlab {

SlotPerm SlotPerm::identity(int n) {
  SlotPerm p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<uint8_t>(i);
  return p;
}

SlotPerm SlotPerm::after(const SlotPerm& first) const {
  SlotPerm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[i] = img[first.img[i]];
  return r;
}

SlotPerm SlotPerm::inverse() const {
  SlotPerm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[img[i]] = static_cast<uint8_t>(i);
  return r;
}

bool SlotPerm::operator<(const SlotPerm& o) const {
  if (n != o.n) return n < o.n;
  for (int i = 0; i < n; ++i)
    if (img[i] != o.img[i]) return img[i] < o.img[i];
  return false;
}

namespace {

struct SlotPermHash {
  size_t operator()(const SlotPerm& p) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < p.n; ++i) {
      h ^= p.img[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct SlotPermEq {
  bool operator()(const SlotPerm& a, const SlotPerm& b) const {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.img[i] != b.img[i]) return false;
    return true;
  }
};

using PermSet = std::unordered_set<SlotPerm, SlotPermHash, SlotPermEq>;

std::vector<SlotPerm> sorted_elements(const PermSet& s) {
  std::vector<SlotPerm> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

PermSet closure(const std::vector<SlotPerm>& gens, int n) {
  PermSet seen;
  SlotPerm id = SlotPerm::identity(n);
  seen.insert(id);
  std::vector<SlotPerm> frontier = {id};
  while (!frontier.empty()) {
    std::vector<SlotPerm> next;
    for (const SlotPerm& p : frontier)
      for (const SlotPerm& g : gens) {
        SlotPerm q = p.after(g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::vector<int> BoxTree::component_offsets() const {
  std::vector<int> offs;
  int acc = 0;
  for (int c : component_sizes) {
    offs.push_back(acc);
    acc += c;
  }
  return offs;
}

BoxTree standard_box_tree(int depth) {
  if (depth < 1 || depth > 4)
    throw Error("box tree depth must be between 1 and 4");
  BoxTree t;
  t.depth = depth;
  t.component_sizes = {1, 1};
  for (int level = 2; level <= depth; ++level)
    t.component_sizes.push_back(1 << (level - 1));
  t.slot_count = 1 << depth;
  return t;
}

IsoAssignment make_assignment(std::vector<int> class_of_slot,
                              std::vector<ColoredGraph> units,
                              const Limits& limits) {
  const int classes = static_cast<int>(units.size());
  if (classes == 0) throw Error("assignment: needs at least one unit");
  std::vector<char> used(classes, 0);
  for (int c : class_of_slot) {
    if (c < 0 || c >= classes)
      throw Error("assignment: class id out of range");
    used[c] = 1;
  }
  for (char u : used)
    if (!u) throw Error("assignment: class ids must be dense from 0");
  for (const ColoredGraph& u : units) {
    if (!is_connected(u)) throw Error("assignment: unit is not connected");
    if (!is_rigid(u, limits)) throw Error("assignment: unit is not rigid");
  }
  for (int i = 0; i < classes; ++i)
    for (int j = i + 1; j < classes; ++j)
      if (graph_isomorphism(units[i], units[j], limits))
        throw Error("assignment: units of distinct classes are isomorphic");
  IsoAssignment a;
  a.class_of_slot = std::move(class_of_slot);
  a.units = std::move(units);
  return a;
}

namespace {

// Component index -> level: the two bare slots sit at level 1, and the
// pairing tree appended for level L is component L.
int component_level(int ci) { return ci < 2 ? 1 : ci; }

IsoAssignment assignment_from_classes(std::vector<int> classes, int class_count,
                                      const Limits& limits) {
  if (class_count > unit_graph_count())
    throw Error("assignment: needs " + std::to_string(class_count) +
                " distinct rigid units, only " +
                std::to_string(unit_graph_count()) + " are shipped");
  std::vector<ColoredGraph> units;
  for (int c = 0; c < class_count; ++c) units.push_back(unit_graph(c));
  return make_assignment(std::move(classes), std::move(units), limits);
}

void require_wall_free(const BoxTree& tree) {
  if (tree.wall_rows != 0)
    throw Error("assignment: canned assignments cover wall-free trees only");
}

}  // namespace

IsoAssignment assign_all_one(const BoxTree& tree, const Limits& limits) {
  require_wall_free(tree);
  return assignment_from_classes(std::vector<int>(tree.slot_count, 0), 1,
                                 limits);
}

IsoAssignment assign_up_to(const BoxTree& tree, int beta,
                           const Limits& limits) {
  require_wall_free(tree);
  if (beta < 1 || beta > tree.depth)
    throw Error("assignment: level bound must be between 1 and the depth");
  std::vector<int> classes(tree.slot_count, -1);
  auto offs = tree.component_offsets();
  int next_class = 1;
  for (int ci = 0; ci < tree.component_count(); ++ci) {
    int cls;
    if (component_level(ci) <= beta)
      cls = 0;
    else
      cls = next_class++;
    for (int s = offs[ci]; s < offs[ci] + tree.component_sizes[ci]; ++s)
      classes[s] = cls;
  }
  return assignment_from_classes(std::move(classes), next_class, limits);
}

IsoAssignment assign_per_component(const BoxTree& tree, const Limits& limits) {
  require_wall_free(tree);
  std::vector<int> classes(tree.slot_count, 0);
  auto offs = tree.component_offsets();
  for (int ci = 0; ci < tree.component_count(); ++ci)
    for (int s = offs[ci]; s < offs[ci] + tree.component_sizes[ci]; ++s)
      classes[s] = ci;
  return assignment_from_classes(std::move(classes), tree.component_count(),
                                 limits);
}

IsoAssignment assign_per_slot(const BoxTree& tree, const Limits& limits) {
  require_wall_free(tree);
  std::vector<int> classes(tree.slot_count);
  for (int s = 0; s < tree.slot_count; ++s) classes[s] = s;
  return assignment_from_classes(std::move(classes), tree.slot_count, limits);
}

namespace {

// One box-swap generator per box whose two child subtrees carry identical
// class assignments, walking every component's pairing tree top-down.
void collect_box_swaps(const std::vector<int>& range, int total,
                       const std::vector<int>& classes,
                       std::vector<SlotPerm>& out) {
  const int k = static_cast<int>(range.size());
  if (k < 2) return;
  const int half = k / 2;
  std::vector<int> left(range.begin(), range.begin() + half);
  std::vector<int> right(range.begin() + half, range.end());
  bool same = true;
  for (int i = 0; i < half; ++i)
    if (classes[left[i]] != classes[right[i]]) {
      same = false;
      break;
    }
  if (same) {
    SlotPerm p = SlotPerm::identity(total);
    for (int i = 0; i < half; ++i) {
      p.img[left[i]] = static_cast<uint8_t>(right[i]);
      p.img[right[i]] = static_cast<uint8_t>(left[i]);
    }
    out.push_back(p);
  }
  collect_box_swaps(left, total, classes, out);
  collect_box_swaps(right, total, classes, out);
}

unsigned long long checked_factorial_product(const std::vector<int>& classes) {
  std::map<int, int> class_sizes;
  for (int c : classes) ++class_sizes[c];
  unsigned long long acc = 1;
  for (const auto& [c, size] : class_sizes)
    for (int f = 2; f <= size; ++f) {
      if (acc > ~0ull / f) throw Error("boxed: ambient order overflows");
      acc *= static_cast<unsigned long long>(f);
    }
  return acc;
}

}  // namespace

BoxedBuild build_boxed(const BoxTree& tree, const IsoAssignment& assign,
                       const Limits& limits) {
  if (static_cast<int>(assign.class_of_slot.size()) != tree.slot_count)
    throw Error("boxed: assignment does not cover the slots");
  if (tree.slot_count > kMaxSlots)
    throw Error("boxed: more than " + std::to_string(kMaxSlots) + " slots");
  int expected = 0;
  for (int c : tree.component_sizes) expected += c;
  if (expected != tree.slot_count)
    throw Error("boxed: component sizes do not sum to the slot count");

  BoxedBuild b;
  b.tree = tree;
  b.assign = assign;

  // Disjoint union of one unit per slot. Units of distinct classes are
  // non-isomorphic connected graphs, so graph automorphisms can only move a
  // slot's copy onto a copy of the same class.
  int offset = 0;
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < tree.slot_count; ++s) {
    const ColoredGraph& u = assign.units[assign.class_of_slot[s]];
    b.slot_vertex_offset.push_back(offset);
    for (auto [x, y] : u.edges) edges.push_back({x + offset, y + offset});
    offset += u.vertex_count;
  }
  b.graph = make_graph(offset, {}, std::move(edges));

  b.ambient_order = checked_factorial_product(assign.class_of_slot);

  auto offs = tree.component_offsets();
  for (int ci = 0; ci < tree.component_count(); ++ci) {
    std::vector<int> range(tree.component_sizes[ci]);
    for (int i = 0; i < tree.component_sizes[ci]; ++i) range[i] = offs[ci] + i;
    collect_box_swaps(range, tree.slot_count, assign.class_of_slot,
                      b.w_generators);
  }
  b.w_elements = sorted_elements(closure(b.w_generators, tree.slot_count));
  (void)limits;
  return b;
}

BoxedBuild build_wall(const BoxTree& tree, const IsoAssignment& assign,
                      int wall_class, int wall_rows, const Limits& limits) {
  if (tree.wall_rows != 0)
    throw Error("wall: the base tree already carries wall rows");
  if (wall_rows < 0) throw Error("wall: negative row count");
  if (wall_class < 0 || wall_class > assign.class_count())
    throw Error("wall: class must name an existing class or the next fresh one");

  BoxTree extended = tree;
  extended.wall_rows = wall_rows;
  for (int r = 0; r < wall_rows; ++r) extended.component_sizes.push_back(2);
  extended.slot_count = tree.slot_count + 2 * wall_rows;
  if (extended.slot_count > kMaxSlots)
    throw Error("wall: more than " + std::to_string(kMaxSlots) + " slots");

  std::vector<int> classes = assign.class_of_slot;
  classes.insert(classes.end(), 2 * wall_rows, wall_class);
  std::vector<ColoredGraph> units = assign.units;
  if (wall_rows > 0 && wall_class == assign.class_count()) {
    if (wall_class >= unit_graph_count())
      throw Error("wall: no unused rigid unit left for a fresh class");
    units.push_back(unit_graph(wall_class));
  }
  IsoAssignment ext = make_assignment(std::move(classes), std::move(units),
                                      limits);
  return build_boxed(extended, ext, limits);
}

namespace {

std::vector<SlotPerm> greedy_generators(const std::vector<SlotPerm>& sorted,
                                        int n) {
  std::vector<SlotPerm> gens;
  PermSet have;
  have.insert(SlotPerm::identity(n));
  for (const SlotPerm& p : sorted) {
    if (have.count(p)) continue;
    gens.push_back(p);
    have = closure(gens, n);
    if (have.size() == sorted.size()) break;
  }
  return gens;
}

std::vector<std::vector<int>> orbit_blocks(const std::vector<SlotPerm>& elems,
                                           int n) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const SlotPerm& p : elems)
    for (int i = 0; i < n; ++i) {
      int a = find(i), bb = find(p.img[i]);
      if (a != bb) parent[a] = bb;
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

struct StageScan {
  bool exceeded = false;
  std::vector<SlotPerm> next;  // sorted
};

// One normalizer step: scan the ambient elements that permute the current
// stage's orbit blocks within their (class, size) type. Every normalizing
// element permutes the orbits, so the restriction loses nothing.
StageScan normalizer_stage(const std::vector<SlotPerm>& cur, int n,
                           const std::vector<int>& classes,
                           long long budget) {
  StageScan scan;
  auto blocks = orbit_blocks(cur, n);
  const int nb = static_cast<int>(blocks.size());

  std::map<std::pair<int, int>, std::vector<int>> types;
  for (int bi = 0; bi < nb; ++bi)
    types[{classes[blocks[bi][0]], static_cast<int>(blocks[bi].size())}]
        .push_back(bi);

  long long count = 1;  // invariant: count <= budget + 1
  auto mul_check = [&](int f) {
    if (count > (budget + 1) / f)
      count = budget + 1;
    else
      count *= f;
  };
  for (const auto& [type, ids] : types)
    for (int f = 2; f <= static_cast<int>(ids.size()); ++f) mul_check(f);
  for (const auto& bl : blocks)
    for (int f = 2; f <= static_cast<int>(bl.size()); ++f) mul_check(f);
  if (count > budget) {
    scan.exceeded = true;
    return scan;
  }

  PermSet curset(cur.begin(), cur.end());
  std::vector<SlotPerm> gens = greedy_generators(cur, n);

  std::vector<std::vector<int>> type_ids;
  for (const auto& [type, ids] : types) type_ids.push_back(ids);
  std::vector<std::vector<int>> sigma = type_ids;  // images, per type

  PermSet accepted;
  std::vector<std::vector<int>> choice(nb);
  for (int bi = 0; bi < nb; ++bi) {
    choice[bi].resize(blocks[bi].size());
    for (size_t i = 0; i < blocks[bi].size(); ++i)
      choice[bi][i] = static_cast<int>(i);
  }

  auto try_candidate = [&]() {
    SlotPerm p;
    p.n = n;
    int ti = 0;
    for (const auto& ids : type_ids) {
      for (size_t k = 0; k < ids.size(); ++k) {
        int src = ids[k], dst = sigma[ti][k];
        for (size_t i = 0; i < blocks[src].size(); ++i)
          p.img[blocks[src][i]] =
              static_cast<uint8_t>(blocks[dst][choice[src][i]]);
      }
      ++ti;
    }
    SlotPerm pinv = p.inverse();
    for (const SlotPerm& w : gens) {
      SlotPerm conj = p.after(w).after(pinv);
      if (!curset.count(conj)) return;
    }
    accepted.insert(p);
  };

  // Odometer over within-block bijections, innermost; block permutations
  // per type, outermost.
  std::function<void(int)> iterate_choices = [&](int bi) {
    if (bi == nb) {
      try_candidate();
      return;
    }
    do {
      iterate_choices(bi + 1);
    } while (std::next_permutation(choice[bi].begin(), choice[bi].end()));
    std::sort(choice[bi].begin(), choice[bi].end());
  };
  std::function<void(int)> iterate_sigma = [&](int ti) {
    if (ti == static_cast<int>(type_ids.size())) {
      iterate_choices(0);
      return;
    }
    do {
      iterate_sigma(ti + 1);
    } while (std::next_permutation(sigma[ti].begin(), sigma[ti].end()));
    std::sort(sigma[ti].begin(), sigma[ti].end());
  };
  iterate_sigma(0);

  scan.next = sorted_elements(accepted);
  return scan;
}

}  // namespace

SlotTower slot_normalizer_tower(const BoxedBuild& build, const Limits& limits) {
  const int n = build.tree.slot_count;
  SlotTower t;
  t.stages.push_back(build.w_elements);
  t.stage_orders.push_back(static_cast<long long>(build.w_elements.size()));
  while (true) {
    StageScan scan = normalizer_stage(t.stages.back(), n,
                                      build.assign.class_of_slot,
                                      limits.max_slot_candidates);
    if (scan.exceeded) {
      t.status = SlotTowerStatus::budget_exceeded;
      return t;
    }
    if (scan.next.size() == t.stages.back().size()) {
      t.height = static_cast<int>(t.stages.size()) - 1;
      t.status = SlotTowerStatus::complete;
      return t;
    }
    t.stages.push_back(std::move(scan.next));
    t.stage_orders.push_back(
        static_cast<long long>(t.stages.back().size()));
  }
}

int boxed_tower_height(const BoxedBuild& build, const Limits& limits) {
  SlotTower t = slot_normalizer_tower(build, limits);
  if (t.status != SlotTowerStatus::complete)
    throw Error("slot tower: candidate budget exceeded before the fixed point");
  return *t.height;
}

}  // namespace towerlab
