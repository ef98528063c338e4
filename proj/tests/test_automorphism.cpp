#include <doctest.h>

#include <algorithm>
#include <vector>

#include "towerlab/automorphism.hpp"
#include "towerlab/catalog.hpp"
#include "towerlab/construct.hpp"
#include "towerlab/group.hpp"

using namespace towerlab;

namespace {

// Every bijection fixing the identity, filtered by multiplicativity.
std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> tail(std::max(0, n - 1));
  for (int i = 1; i < n; ++i) tail[i - 1] = i;
  do {
    std::vector<int> f(n);
    f[0] = 0;
    for (int i = 1; i < n; ++i) f[i] = tail[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = f[g.op(a, b)] == g.op(f[a], f[b]);
    if (ok) out.push_back(std::move(f));
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("automorphism group orders of the small families") {
  auto aut_order = [](const char* spec) {
    return automorphism_group(construct_named(spec)).order();
  };
  CHECK(aut_order("T") == 1);
  CHECK(aut_order("C2") == 1);
  CHECK(aut_order("C3") == 2);
  CHECK(aut_order("C4") == 2);
  CHECK(aut_order("C5") == 4);
  CHECK(aut_order("C6") == 2);
  CHECK(aut_order("C8") == 4);
  CHECK(aut_order("C2xC2") == 6);
  CHECK(aut_order("C2xC2xC2") == 168);
  CHECK(aut_order("C3xC3") == 48);
  CHECK(aut_order("S3") == 6);
  CHECK(aut_order("D8") == 8);
  CHECK(aut_order("Q8") == 24);
  CHECK(aut_order("A4") == 24);
  CHECK(aut_order("S4") == 24);
  CHECK(aut_order("D10") == 20);
  CHECK(aut_order("D12") == 12);
  CHECK(aut_order("Dic3") == 12);
  CHECK(aut_order("D14") == 42);
}

TEST_CASE("backtracking search equals brute force through order 8") {
  for (const CatalogEntry& e : catalog_list(8)) {
    CAPTURE(e.spec);
    GroupPtr g = construct_named(e.spec);
    AutGroup aut = automorphism_group(g);
    std::vector<std::vector<int>> brute = brute_force_automorphisms(*g);
    CHECK(aut.realization == brute);  // both lists are lex-sorted
  }
}

TEST_CASE("numbering is canonical: identity automorphism first") {
  for (const char* spec : {"C6", "D8", "Q8", "A4"}) {
    AutGroup aut = automorphism_group(construct_named(spec));
    for (int x = 0; x < aut.base->order(); ++x)
      CHECK(aut.realization[0][x] == x);
  }
}

TEST_CASE("abstract product matches composition of realizations") {
  AutGroup aut = automorphism_group(construct_named("D8"));
  const int m = aut.order();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int k = aut.group->op(i, j);
      for (int x = 0; x < aut.base->order(); ++x)
        CHECK(aut.realization[k][x] == aut.realization[i][aut.realization[j][x]]);
    }
}

TEST_CASE("each realization entry is an automorphism") {
  AutGroup aut = automorphism_group(construct_named("Q8"));
  const FiniteGroup& g = *aut.base;
  for (const std::vector<int>& f : aut.realization) {
    std::vector<int> seen(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) seen[f[x]] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        CHECK(f[g.op(a, b)] == g.op(f[a], f[b]));
  }
}

TEST_CASE("natural map: kernel is the center, image is Inn") {
  for (const char* spec : {"S3", "D8", "Q8", "A4", "C6", "Dic3"}) {
    CAPTURE(spec);
    GroupPtr g = construct_named(spec);
    AutGroup aut = automorphism_group(g);
    Homomorphism pi = inner_homomorphism(aut);
    CHECK(pi.source == g);
    CHECK(pi.target == aut.group);
    CHECK(kernel(pi).members == g->center_members());
    CHECK(image_subgroup(pi).order() ==
          g->order() / static_cast<int>(g->center_members().size()));
    // pi(g) realizes conjugation by g
    for (int a = 0; a < g->order(); ++a)
      for (int x = 0; x < g->order(); ++x)
        CHECK(aut.realization[pi.image[a]][x] == g->conj(a, x));
  }
}

TEST_CASE("completeness reports") {
  CompletenessReport s3 = is_complete(construct_named("S3"));
  CHECK(s3.complete);
  CHECK(s3.center_order == 1);
  CHECK(s3.outer_index == 1);
  CompletenessReport s4 = is_complete(construct_named("S4"));
  CHECK(s4.complete);
  CompletenessReport a4 = is_complete(construct_named("A4"));
  CHECK_FALSE(a4.complete);  // centerless but has outer automorphisms
  CHECK(a4.center_order == 1);
  CHECK(a4.outer_index == 2);
  CompletenessReport d8 = is_complete(construct_named("D8"));
  CHECK_FALSE(d8.complete);
  CHECK(d8.center_order == 2);
  CompletenessReport c2 = is_complete(construct_named("C2"));
  CHECK_FALSE(c2.complete);
  CHECK(c2.outer_index == 1);  // Aut(C2) = Inn(C2) = 1, but the center is all
}

TEST_CASE("caps abort instead of truncating") {
  Limits tight;
  tight.max_group_order = 100;
  CHECK_THROWS_AS(automorphism_group(construct_named("C2xC2xC2"), tight),
                  CapError);  // |Aut| = 168 > 100
  Limits tiny;
  tiny.max_group_order = 8;
  CHECK_THROWS_AS(automorphism_group(construct_named("D16"), tiny),
                  CapError);  // base order 16 > 8
  // at exactly the cap the computation succeeds
  Limits exact;
  exact.max_group_order = 168;
  CHECK(automorphism_group(construct_named("C2xC2xC2"), exact).order() == 168);
}
