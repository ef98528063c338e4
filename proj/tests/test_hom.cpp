#include <doctest.h>

#include <vector>

#include "towerlab/construct.hpp"
#include "towerlab/group.hpp"
#include "towerlab/hom.hpp"

using namespace towerlab;

namespace {

// reduction C2n -> Cn, x mod n
Homomorphism mod_map(const GroupPtr& c2n, const GroupPtr& cn) {
  std::vector<int> img(c2n->order());
  for (int x = 0; x < c2n->order(); ++x) img[x] = x % cn->order();
  return make_homomorphism(c2n, cn, img);
}

}  // namespace

TEST_CASE("make_homomorphism validates multiplicativity and the identity") {
  GroupPtr c4 = construct_named("C4");
  GroupPtr c2 = construct_named("C2");
  CHECK_NOTHROW(mod_map(c4, c2));
  CHECK_THROWS_AS(make_homomorphism(c4, c2, {1, 0, 1, 0}), Error);  // id moves
  CHECK_THROWS_AS(make_homomorphism(c4, c2, {0, 1, 1, 0}), Error);  // not mult
  CHECK_THROWS_AS(make_homomorphism(c4, c2, {0, 1}), Error);        // length
  CHECK_THROWS_AS(make_homomorphism(c4, c2, {0, 2, 0, 2}), Error);  // range
}

TEST_CASE("kernel and image of the mod-2 reduction") {
  GroupPtr c4 = construct_named("C4");
  GroupPtr c2 = construct_named("C2");
  Homomorphism f = mod_map(c4, c2);
  CHECK(kernel(f).members == std::vector<int>{0, 2});
  CHECK(image_subgroup(f).members == std::vector<int>{0, 1});
  CHECK_FALSE(is_injective(f));
  CHECK_FALSE(is_bijective(f));
  Homomorphism id = identity_hom(c4);
  CHECK(is_bijective(id));
  CHECK(kernel(id).members == std::vector<int>{0});
}

TEST_CASE("composition requires shared stage objects") {
  GroupPtr c4 = construct_named("C4");
  GroupPtr c2 = construct_named("C2");
  GroupPtr c2_again = construct_named("C2");  // isomorphic, different object
  Homomorphism f = mod_map(c4, c2);
  Homomorphism g = identity_hom(c2);
  Homomorphism h = identity_hom(c2_again);
  CHECK_NOTHROW(hom_then(f, g));
  CHECK_THROWS_AS(hom_then(f, h), Error);
  Homomorphism fg = hom_then(f, g);
  CHECK(fg.image == f.image);
}

TEST_CASE("composition applies left-to-right") {
  GroupPtr c8 = construct_named("C8");
  GroupPtr c4 = construct_named("C4");
  GroupPtr c2 = construct_named("C2");
  Homomorphism f = mod_map(c8, c4);
  Homomorphism g = mod_map(c4, c2);
  Homomorphism fg = hom_then(f, g);
  CHECK(fg.source == c8);
  CHECK(fg.target == c2);
  for (int x = 0; x < 8; ++x) CHECK(fg.image[x] == x % 2);
}

TEST_CASE("hom_inverse inverts bijections and rejects the rest") {
  GroupPtr c5 = construct_named("C5");
  std::vector<int> dbl(5);
  for (int x = 0; x < 5; ++x) dbl[x] = (2 * x) % 5;
  Homomorphism f = make_homomorphism(c5, c5, dbl);
  Homomorphism fi = hom_inverse(f);
  for (int x = 0; x < 5; ++x) CHECK(fi.image[f.image[x]] == x);
  GroupPtr c2 = construct_named("C2");
  CHECK_THROWS_AS(hom_inverse(mod_map(construct_named("C4"), c2)), Error);
}

TEST_CASE("find_isomorphism returns a verified witness") {
  GroupPtr c6 = construct_named("C6");
  GroupPtr c2xc3 = construct_named("C2xC3");
  auto iso = find_isomorphism(c6, c2xc3);
  REQUIRE(iso.has_value());
  CHECK(is_bijective(*iso));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(iso->image[c6->op(a, b)] ==
            c2xc3->op(iso->image[a], iso->image[b]));
}

TEST_CASE("find_isomorphism on the same object yields the identity") {
  for (const char* spec : {"T", "C2", "S3", "D8", "Q8", "A4", "C3xC3"}) {
    GroupPtr g = construct_named(spec);
    auto iso = find_isomorphism(g, g);
    REQUIRE(iso.has_value());
    for (int x = 0; x < g->order(); ++x) CHECK(iso->image[x] == x);
  }
}

TEST_CASE("find_isomorphism distinguishes non-isomorphic equal-order groups") {
  CHECK_FALSE(find_isomorphism(construct_named("C4"), construct_named("C2xC2")));
  CHECK_FALSE(find_isomorphism(construct_named("D8"), construct_named("Q8")));
  CHECK_FALSE(find_isomorphism(construct_named("D8"), construct_named("C8")));
  CHECK_FALSE(find_isomorphism(construct_named("S3xC2"), construct_named("Dic3")));
  CHECK_FALSE(find_isomorphism(construct_named("S3xC2"), construct_named("A4")));
}
