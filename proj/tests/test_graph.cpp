#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "towerlab/boxed.hpp"
#include "towerlab/graph.hpp"

using namespace towerlab;

namespace {

ColoredGraph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, {}, e);
}

ColoredGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make_graph(n, {}, e);
}

ColoredGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, {}, e);
}

long long brute_force_aut_count(const ColoredGraph& g) {
  std::vector<int> p(g.vertex_count);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < g.vertex_count && ok; ++v)
      ok = g.colors[v] == g.colors[p[v]];
    for (int u = 0; u < g.vertex_count && ok; ++u)
      for (int v = u + 1; v < g.vertex_count && ok; ++v)
        ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("graph validation and canonicalization") {
  CHECK_THROWS_AS(make_graph(0, {}, {}), Error);
  CHECK_THROWS_AS(make_graph(2, {}, {{0, 2}}), Error);   // out of range
  CHECK_THROWS_AS(make_graph(2, {}, {{1, 1}}), Error);   // self-loop
  CHECK_THROWS_AS(make_graph(3, {0, 1}, {}), Error);     // colors length
  CHECK_THROWS_AS(make_graph(2, {0, 2}, {}), Error);     // colors not dense
  ColoredGraph g = make_graph(3, {}, {{2, 1}, {1, 0}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.colors == std::vector<int>{0, 0, 0});
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  // duplicate edges are rejected regardless of orientation
  CHECK_THROWS_AS(make_graph(2, {}, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(make_graph(3, {}, {{0, 1}, {0, 1}}), Error);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(5)));
  CHECK(is_connected(make_graph(1, {}, {})));
  CHECK_FALSE(is_connected(make_graph(3, {}, {{0, 1}})));
}

TEST_CASE("automorphism counts of standard families") {
  CHECK(graph_automorphism_group(path(1)).order() == 1);
  CHECK(graph_automorphism_group(path(3)).order() == 2);
  CHECK(graph_automorphism_group(path(5)).order() == 2);
  CHECK(graph_automorphism_group(cycle(5)).order() == 10);
  CHECK(graph_automorphism_group(cycle(6)).order() == 12);
  CHECK(graph_automorphism_group(complete(4)).order() == 24);
  // empty graph on 4 vertices: the full symmetric group
  CHECK(graph_automorphism_group(make_graph(4, {}, {})).order() == 24);
}

TEST_CASE("colors restrict automorphisms") {
  ColoredGraph free = path(3);
  CHECK(graph_automorphism_group(free).order() == 2);
  ColoredGraph pinned = make_graph(3, {1, 0, 2}, {{0, 1}, {1, 2}});
  CHECK(graph_automorphism_group(pinned).order() == 1);
  ColoredGraph balanced = make_graph(3, {1, 0, 1}, {{0, 1}, {1, 2}});
  CHECK(graph_automorphism_group(balanced).order() == 2);
}

TEST_CASE("group structure of the cycle's automorphisms") {
  GraphAutGroup aut = graph_automorphism_group(cycle(4));
  CHECK(aut.order() == 8);
  // identity is element 0
  for (int v = 0; v < 4; ++v) CHECK(aut.vertex_action[0][v] == v);
  // composition matches the abstract product
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int k = aut.group->op(i, j);
      for (int v = 0; v < 4; ++v)
        CHECK(aut.vertex_action[k][v] ==
              aut.vertex_action[i][aut.vertex_action[j][v]]);
    }
}

TEST_CASE("search equals brute force on assorted small graphs") {
  std::vector<ColoredGraph> corpus = {
      path(2),
      path(4),
      cycle(3),
      cycle(6),
      complete(5),
      make_graph(4, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
      make_graph(5, {0, 0, 1, 1, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
      make_graph(6, {}, {{0, 1}, {2, 3}, {4, 5}}),  // perfect matching
      make_graph(5, {}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),  // star
  };
  for (size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    CHECK(graph_automorphism_group(corpus[i]).order() ==
          brute_force_aut_count(corpus[i]));
  }
}

TEST_CASE("graph isomorphism finds a relabeling witness") {
  ColoredGraph c5 = cycle(5);
  // relabel by the permutation v -> (2v+1) mod 5
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : c5.edges)
    edges.push_back({(2 * u + 1) % 5, (2 * v + 1) % 5});
  ColoredGraph scrambled = make_graph(5, {}, edges);
  auto iso = graph_isomorphism(c5, scrambled);
  REQUIRE(iso.has_value());
  for (auto [u, v] : c5.edges)
    CHECK(scrambled.adjacent((*iso)[u], (*iso)[v]));

  CHECK_FALSE(graph_isomorphism(c5, path(5)).has_value());
  CHECK_FALSE(graph_isomorphism(c5, cycle(6)).has_value());
  // same shape, incompatible colors
  ColoredGraph red = make_graph(2, {0, 1}, {{0, 1}});
  ColoredGraph blue = make_graph(2, {1, 0}, {{0, 1}});
  auto cross = graph_isomorphism(red, blue);
  REQUIRE(cross.has_value());  // swapping is color-consistent here
  CHECK((*cross)[0] == 1);
  ColoredGraph mono = make_graph(2, {0, 0}, {{0, 1}});
  CHECK_FALSE(graph_isomorphism(red, mono).has_value());
}

TEST_CASE("rigidity detection") {
  CHECK_FALSE(is_rigid(cycle(4)));
  CHECK(is_rigid(make_graph(1, {}, {})));
  // smallest rigid nontrivial tree: the 7-vertex asymmetric tree
  ColoredGraph t = make_graph(
      7, {}, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}});
  CHECK(is_rigid(t));
}

TEST_CASE("shipped unit graphs are six-vertex, connected, rigid, distinct") {
  REQUIRE(unit_graph_count() == 8);
  for (int k = 0; k < 8; ++k) {
    CAPTURE(k);
    const ColoredGraph& u = unit_graph(k);
    CHECK(u.vertex_count == 6);
    CHECK(is_connected(u));
    CHECK(is_rigid(u));
    CHECK(brute_force_aut_count(u) == 1);
  }
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK_FALSE(graph_isomorphism(unit_graph(a), unit_graph(b)).has_value());
    }
  CHECK_THROWS_AS(unit_graph(8), Error);
  CHECK_THROWS_AS(unit_graph(-1), Error);
}

TEST_CASE("caps refuse oversized searches") {
  Limits few;
  few.max_graph_vertices = 4;
  CHECK_THROWS_AS(graph_automorphism_group(path(5), few), CapError);
  // K6 has 720 automorphisms, beyond the default group-order cap of 512
  CHECK_THROWS_AS(graph_automorphism_group(complete(6)), CapError);
}
