#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "towerlab/catalog.hpp"
#include "towerlab/construct.hpp"
#include "towerlab/hom.hpp"

using namespace towerlab;

TEST_CASE("orders one through fifteen are covered completely") {
  // isomorphism class counts: oeis A000001
  const std::map<int, int> classes = {{1, 1}, {2, 1},  {3, 1}, {4, 2},
                                      {5, 1}, {6, 2},  {7, 1}, {8, 5},
                                      {9, 2}, {10, 2}, {11, 1}, {12, 5},
                                      {13, 1}, {14, 2}, {15, 1}};
  std::map<int, std::vector<GroupPtr>> by_order;
  for (const CatalogEntry& e : catalog_list(15))
    by_order[e.order].push_back(construct_named(e.spec));
  for (auto [order, expected] : classes) {
    CAPTURE(order);
    REQUIRE(by_order.count(order) == 1);
    const auto& groups = by_order[order];
    CHECK(static_cast<int>(groups.size()) == expected);
    // pairwise non-isomorphic
    for (size_t a = 0; a < groups.size(); ++a)
      for (size_t b = a + 1; b < groups.size(); ++b)
        CHECK_FALSE(find_isomorphism(groups[a], groups[b]).has_value());
  }
}

TEST_CASE("catalog entries are sorted and carry correct flags") {
  std::vector<CatalogEntry> list = catalog_list();
  CHECK(list.size() == 37);
  for (size_t i = 0; i + 1 < list.size(); ++i) {
    bool ordered = list[i].order < list[i + 1].order ||
                   (list[i].order == list[i + 1].order &&
                    list[i].spec < list[i + 1].spec);
    CHECK(ordered);
  }
  for (const CatalogEntry& e : list) {
    CAPTURE(e.spec);
    GroupPtr g = construct_named(e.spec);
    CHECK(e.order == g->order());
    CHECK(e.abelian == g->abelian());
    CHECK(e.centerless == (g->center_members().size() == 1));
    CHECK(e.order <= 48);
  }
}

TEST_CASE("max_order filters and validates") {
  CHECK(catalog_list(1).size() == 1);
  CHECK(catalog_list(15).size() == 28);
  for (const CatalogEntry& e : catalog_list(20)) CHECK(e.order <= 20);
  CHECK_THROWS_AS(catalog_list(0), Error);
  CHECK_THROWS_AS(catalog_list(49), Error);
}

TEST_CASE("the centerless members") {
  // The trivial group qualifies: its center is trivial.
  std::vector<std::string> c = centerless_catalog();
  std::set<std::string> got(c.begin(), c.end());
  CHECK(got == std::set<std::string>{"T", "S3", "D10", "A4", "D14", "S4",
                                     "S3xS3"});
  CHECK(centerless_catalog(24) ==
        std::vector<std::string>{"T", "S3", "D10", "A4", "D14", "S4"});
}

TEST_CASE("survey rows summarize the tower runs") {
  std::vector<SurveyRow> rows = survey(12, 6, 2);
  CHECK(rows.size() == catalog_list(12).size());
  for (const SurveyRow& r : rows) {
    CAPTURE(r.spec);
    CHECK(r.order == construct_named(r.spec)->order());
    REQUIRE_FALSE(r.stage_orders.empty());
    CHECK(r.stage_orders[0][0] == r.order);
  }
  // spot checks against the frozen tower table
  auto find = [&](const std::string& spec) -> const SurveyRow& {
    for (const SurveyRow& r : rows)
      if (r.spec == spec) return r;
    throw std::runtime_error("missing row: " + spec);
  };
  const SurveyRow& s3 = find("S3");
  CHECK(s3.status == TowerStatus::terminated);
  CHECK(*s3.termination == Ordinal{0, 0});
  CHECK(s3.centerless_onset == 0);
  const SurveyRow& d8 = find("D8");
  CHECK(d8.status == TowerStatus::terminated);
  CHECK(*d8.termination == Ordinal{1, 1});
  CHECK(d8.stage_orders ==
        std::vector<std::vector<int>>{{8, 8}, {2, 1, 1}});
  CHECK(d8.periods == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_FALSE(d8.centerless_onset.has_value());
  const SurveyRow& c8 = find("C8");
  CHECK(c8.status == TowerStatus::terminated);
  CHECK(*c8.termination == Ordinal{0, 2});
  CHECK(c8.centerless_onset == 2);
  const SurveyRow& dic3 = find("Dic3");
  CHECK(dic3.status == TowerStatus::terminated);
  CHECK(dic3.periods == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("survey respects its stage budget") {
  std::vector<SurveyRow> rows = survey(9, 2, 1);
  for (const SurveyRow& r : rows) {
    CAPTURE(r.spec);
    for (const auto& blk : r.stage_orders) CHECK(blk.size() <= 2);
  }
}
