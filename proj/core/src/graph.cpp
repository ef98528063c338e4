#include "towerlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace towerlab {

bool ColoredGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  auto e = std::minmax(u, v);
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(e.first, e.second));
}

ColoredGraph make_graph(int vertex_count, std::vector<int> colors,
                        std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 1) throw Error("graph: needs at least one vertex");
  if (colors.empty()) colors.assign(vertex_count, 0);
  if (static_cast<int>(colors.size()) != vertex_count)
    throw Error("graph: color list length mismatch");
  int max_color = 0;
  for (int c : colors) {
    if (c < 0) throw Error("graph: negative color");
    max_color = std::max(max_color, c);
  }
  std::vector<char> seen_color(max_color + 1, 0);
  for (int c : colors) seen_color[c] = 1;
  for (char s : seen_color)
    if (!s) throw Error("graph: color ids must be dense from 0");

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error("graph: edge endpoint out of range");
    if (u == v) throw Error("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("graph: duplicate edge");

  ColoredGraph g;
  g.vertex_count = vertex_count;
  g.colors = std::move(colors);
  g.edges = std::move(edges);
  return g;
}

namespace {

std::vector<std::vector<char>> adjacency_matrix(const ColoredGraph& g) {
  std::vector<std::vector<char>> adj(g.vertex_count,
                                     std::vector<char>(g.vertex_count, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

// Iterated neighborhood refinement of vertex colors. The refined color of a
// vertex is determined by its previous color and the multiset of its
// neighbors' previous colors; ids are reassigned densely by sorted
// signature, so the result is canonical for the labeled graph.
std::vector<int> refine_colors(int n, std::vector<int> colors,
                               const std::vector<std::vector<char>>& adj) {
  int classes = 0;
  for (int c : colors) classes = std::max(classes, c + 1);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(colors[v]);
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (adj[v][u]) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next_id = 0;
    for (auto& [s, id] : ids) id = next_id++;
    std::vector<int> refined(n);
    for (const auto& [s, v] : sig) refined[v] = ids[s];
    if (next_id == classes) return refined;
    classes = next_id;
    colors = std::move(refined);
  }
}

// Enumerates color- and adjacency-preserving bijections source -> target for
// two graphs refined jointly. sink returns false to stop.
void enumerate_maps(const ColoredGraph& a, const ColoredGraph& b,
                    const std::function<bool(const std::vector<int>&)>& sink) {
  if (a.vertex_count != b.vertex_count) return;
  const int n = a.vertex_count;

  // Joint refinement over the disjoint union keeps refined ids comparable
  // across the two graphs.
  ColoredGraph uni;
  uni.vertex_count = 2 * n;
  uni.colors = a.colors;
  uni.colors.insert(uni.colors.end(), b.colors.begin(), b.colors.end());
  uni.edges = a.edges;
  for (auto [u, v] : b.edges) uni.edges.push_back({u + n, v + n});
  std::sort(uni.edges.begin(), uni.edges.end());
  auto uni_adj = adjacency_matrix(uni);
  std::vector<int> refined = refine_colors(2 * n, uni.colors, uni_adj);
  std::vector<int> ca(refined.begin(), refined.begin() + n);
  std::vector<int> cb(refined.begin() + n, refined.end());

  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return;
  }

  auto adj_a = adjacency_matrix(a);
  auto adj_b = adjacency_matrix(b);
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  bool stopped = false;

  auto rec = [&](auto&& self, int v) -> void {
    if (stopped) return;
    if (v == n) {
      if (!sink(img)) stopped = true;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || ca[v] != cb[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (adj_a[v][u] != adj_b[w][img[u]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      img[v] = -1;
      if (stopped) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

GraphAutGroup graph_automorphism_group(const ColoredGraph& g,
                                       const Limits& limits) {
  if (g.vertex_count > limits.max_graph_vertices)
    throw CapError("graph automorphisms: vertex count exceeds cap " +
                   std::to_string(limits.max_graph_vertices));
  std::vector<std::vector<int>> perms;
  bool overflow = false;
  enumerate_maps(g, g, [&](const std::vector<int>& p) {
    if (static_cast<int>(perms.size()) == limits.max_group_order) {
      overflow = true;
      return false;
    }
    perms.push_back(p);
    return true;
  });
  if (overflow)
    throw CapError("graph automorphisms: group order exceeds cap " +
                   std::to_string(limits.max_group_order));
  std::sort(perms.begin(), perms.end());

  const int n_aut = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n_aut; ++i) index_of[perms[i]] = i;
  std::vector<int> flat(static_cast<size_t>(n_aut) * n_aut);
  std::vector<int> comp(g.vertex_count);
  for (int i = 0; i < n_aut; ++i)
    for (int j = 0; j < n_aut; ++j) {
      for (int v = 0; v < g.vertex_count; ++v) comp[v] = perms[i][perms[j][v]];
      auto it = index_of.find(comp);
      if (it == index_of.end())
        throw Error("graph automorphisms: composition fell outside the set");
      flat[static_cast<size_t>(i) * n_aut + j] = it->second;
    }

  GraphAutGroup out;
  out.group = FiniteGroup::trusted(std::move(flat), n_aut);
  out.vertex_action = std::move(perms);
  return out;
}

std::optional<std::vector<int>> graph_isomorphism(const ColoredGraph& a,
                                                  const ColoredGraph& b,
                                                  const Limits& limits) {
  if (a.vertex_count > limits.max_graph_vertices ||
      b.vertex_count > limits.max_graph_vertices)
    throw CapError("graph isomorphism: vertex count exceeds cap " +
                   std::to_string(limits.max_graph_vertices));
  std::optional<std::vector<int>> found;
  enumerate_maps(a, b, [&](const std::vector<int>& p) {
    found = p;
    return false;
  });
  return found;
}

bool is_rigid(const ColoredGraph& g, const Limits& limits) {
  if (g.vertex_count > limits.max_graph_vertices)
    throw CapError("graph rigidity: vertex count exceeds cap " +
                   std::to_string(limits.max_graph_vertices));
  int count = 0;
  enumerate_maps(g, g, [&](const std::vector<int>&) {
    ++count;
    return count < 2;
  });
  return count == 1;
}

bool is_connected(const ColoredGraph& g) {
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  auto adj = adjacency_matrix(g);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.vertex_count; ++u)
      if (adj[v][u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.vertex_count;
}

}  // namespace towerlab
