#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/config.hpp"
#include "towerlab/group.hpp"
#include "towerlab/ordinal.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

struct CatalogEntry {
  std::string spec;  // construct_named expression
  int order = 0;
  bool abelian = false;
  bool centerless = false;
};

// Every isomorphism class of order <= 15 plus a hand-picked set of larger
// groups up to order 48, each named by a constructor expression. Sorted by
// order, then spec.
std::vector<CatalogEntry> catalog_list(int max_order = 48);

// Constructor expressions of the centerless catalog members.
std::vector<std::string> centerless_catalog(int max_order = 48);

struct SurveyRow {
  std::string spec;
  int order = 0;
  int center_order = 0;
  TowerStatus status = TowerStatus::terminated;
  std::optional<Ordinal> termination;
  std::optional<int> centerless_onset;  // first finite stage with trivial center
  std::vector<std::vector<int>> stage_orders;  // per block
  std::vector<std::pair<int, int>> periods;    // per closed block
};

// Tower survey over the catalog.
std::vector<SurveyRow> survey(int max_order, int max_stages = 8,
                              int max_limit_blocks = 2,
                              const Limits& limits = {});

}  // namespace towerlab
