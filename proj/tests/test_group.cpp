#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "towerlab/construct.hpp"
#include "towerlab/group.hpp"

using namespace towerlab;

namespace {

std::vector<std::vector<int>> nested(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[a][b] = g.op(a, b);
  return t;
}

}  // namespace

TEST_CASE("cayley table validation rejects each defect distinctly") {
  CHECK_THROWS_AS(from_cayley_table({}), Error);
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1}}), Error);        // not square
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 2}}), Error);     // range
  CHECK_THROWS_AS(from_cayley_table({{1, 0}, {0, 1}}), Error);     // identity
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 1}}), Error);     // Latin row
  // associativity: a Latin square with identity that is not a group
  // (order 5 quasigroup).
  std::vector<std::vector<int>> q = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 3, 4, 0, 1},
      {3, 4, 1, 2, 0},
      {4, 2, 0, 1, 3},
  };
  CHECK_THROWS_AS(from_cayley_table(q), Error);
  // wrong names length
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 0}}, {"e"}), Error);
  CHECK_NOTHROW(from_cayley_table({{0, 1}, {1, 0}}, {"e", "g"}));
}

TEST_CASE("round-trip: constructed groups revalidate") {
  for (const char* spec : {"C6", "D8", "Q8", "S4", "A4", "C2xC2xC2"}) {
    GroupPtr g = construct_named(spec);
    GroupPtr h = from_cayley_table(nested(*g), g->names());
    CHECK(h->order() == g->order());
    CHECK(h->flat_table() == g->flat_table());
  }
}

TEST_CASE("element invariants on S3") {
  GroupPtr s3 = construct_named("S3");
  REQUIRE(s3->order() == 6);
  CHECK_FALSE(s3->abelian());
  CHECK(s3->center_members() == std::vector<int>{0});
  std::vector<int> orders, classes;
  for (int x = 0; x < 6; ++x) {
    orders.push_back(s3->element_order(x));
    classes.push_back(s3->class_size(x));
  }
  std::sort(orders.begin(), orders.end());
  std::sort(classes.begin(), classes.end());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
  CHECK(classes == std::vector<int>{1, 2, 2, 3, 3, 3});
}

TEST_CASE("group axioms hold pointwise on a random catalog sample") {
  std::mt19937 rng(20240817);
  for (const char* spec : {"D12", "Dic3", "A4", "C4xC2", "S3xC3"}) {
    GroupPtr g = construct_named(spec);
    const int n = g->order();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g->op(g->op(a, b), c) == g->op(a, g->op(b, c)));
      CHECK(g->op(a, g->inv(a)) == 0);
      CHECK(g->op(g->inv(a), a) == 0);
      CHECK(g->op(0, a) == a);
      CHECK(g->op(a, 0) == a);
      // conjugation preserves the element profile
      CHECK(g->profile(g->conj(b, a)) == g->profile(a));
    }
  }
}

TEST_CASE("center and centralizer agree with brute force") {
  for (const char* spec : {"D8", "Q8", "D12", "A4"}) {
    GroupPtr g = construct_named(spec);
    const int n = g->order();
    std::vector<int> brute;
    for (int x = 0; x < n; ++x) {
      bool central = true;
      for (int y = 0; y < n && central; ++y)
        central = g->op(x, y) == g->op(y, x);
      if (central) brute.push_back(x);
    }
    CHECK(center(g).members == brute);
    CHECK(centralizer_in(g, as_subgroup(g, {0})).members ==
          [&] {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            return all;
          }());
  }
}

TEST_CASE("D8 center is the rotation of order two") {
  GroupPtr d8 = construct_named("D8");
  CHECK(center(d8).members == std::vector<int>{0, 2});
}

TEST_CASE("subgroup_generated and as_subgroup") {
  GroupPtr d8 = construct_named("D8");
  Subgroup rot = subgroup_generated(d8, {1});
  CHECK(rot.members == std::vector<int>{0, 1, 2, 3});
  Subgroup whole = subgroup_generated(d8, {1, 4});
  CHECK(whole.order() == 8);
  CHECK_THROWS_AS(as_subgroup(d8, {0, 1}), Error);       // not closed
  CHECK_THROWS_AS(as_subgroup(d8, {1, 3}), Error);       // no identity
  CHECK_THROWS_AS(as_subgroup(d8, {0, 99}), Error);      // out of range
  CHECK(as_subgroup(d8, {2, 0}).members == std::vector<int>{0, 2});
  CHECK_THROWS_AS(subgroup_generated(d8, {8}), Error);
}

TEST_CASE("normalizer_in versus brute force on S4") {
  GroupPtr s4 = construct_named("S4");
  // subgroup generated by the transposition (0 1), one-line "1023"
  Subgroup h = subgroup_generated(s4, {6});
  REQUIRE(h.order() == 2);
  Subgroup nz = normalizer_in(s4, h);
  std::vector<int> brute;
  std::vector<char> in(s4->order(), 0);
  for (int m : h.members) in[m] = 1;
  for (int x = 0; x < s4->order(); ++x) {
    bool ok = true;
    for (int m : h.members)
      if (!in[s4->conj(x, m)]) {
        ok = false;
        break;
      }
    if (ok) brute.push_back(x);
  }
  CHECK(nz.members == brute);
  CHECK(nz.order() == 4);
}

TEST_CASE("fingerprints separate D8 from Q8 and match across isomorphic presentations") {
  GroupPtr d8 = construct_named("D8");
  GroupPtr q8 = construct_named("Q8");
  CHECK_FALSE(fingerprint(*d8) == fingerprint(*q8));
  GroupPtr c6 = construct_named("C6");
  GroupPtr c2xc3 = construct_named("C2xC3");
  CHECK(fingerprint(*c6) == fingerprint(*c2xc3));
}

TEST_CASE("minimal generating sets are minimal and lexicographically first") {
  CHECK(minimal_generating_set(*construct_named("T")).empty());
  CHECK(minimal_generating_set(*construct_named("C6")) == std::vector<int>{1});
  CHECK(minimal_generating_set(*construct_named("C2xC2")) ==
        std::vector<int>{1, 2});
  GroupPtr d8 = construct_named("D8");
  std::vector<int> gens = minimal_generating_set(*d8);
  REQUIRE(gens.size() == 2);
  CHECK(gens == std::vector<int>{1, 4});
  CHECK(subgroup_generated(d8, gens).order() == 8);
}
