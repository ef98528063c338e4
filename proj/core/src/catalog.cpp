#include "towerlab/catalog.hpp"

#include <algorithm>

#include "towerlab/construct.hpp"

namespace towerlab {

namespace {

// Orders 1..15 are covered completely (28 isomorphism classes); above that
// a hand-picked selection up to order 48.
const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs = {
      // every group of order 1..15
      "T",
      "C2",
      "C3",
      "C4", "C2xC2",
      "C5",
      "C6", "S3",
      "C7",
      "C8", "C4xC2", "C2xC2xC2", "D8", "Q8",
      "C9", "C3xC3",
      "C10", "D10",
      "C11",
      "C12", "C6xC2", "D12", "A4", "Dic3",
      "C13",
      "C14", "D14",
      "C15",
      // selected larger groups
      "D16", "D8xC2", "Dic4", "Q8xC2",
      "S3xC3",
      "D20",
      "A4xC2", "S4",
      "S3xS3",
  };
  return specs;
}

}  // namespace

std::vector<CatalogEntry> catalog_list(int max_order) {
  if (max_order < 1) throw Error("catalog: max order must be positive");
  if (max_order > 48)
    throw Error("catalog: no entries beyond order 48");
  std::vector<CatalogEntry> out;
  for (const std::string& spec : catalog_specs()) {
    GroupPtr g = construct_named(spec);
    if (g->order() > max_order) continue;
    CatalogEntry e;
    e.spec = spec;
    e.order = g->order();
    e.abelian = g->abelian();
    e.centerless = g->center_members().size() == 1;
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.order != b.order ? a.order < b.order
                                               : a.spec < b.spec;
                   });
  return out;
}

std::vector<std::string> centerless_catalog(int max_order) {
  std::vector<std::string> out;
  for (const CatalogEntry& e : catalog_list(max_order))
    if (e.centerless) out.push_back(e.spec);
  return out;
}

std::vector<SurveyRow> survey(int max_order, int max_stages,
                              int max_limit_blocks, const Limits& limits) {
  Limits run_limits = limits;
  run_limits.max_stages_per_block = max_stages;
  run_limits.max_limit_blocks = max_limit_blocks;
  std::vector<SurveyRow> rows;
  for (const CatalogEntry& e : catalog_list(max_order)) {
    GroupPtr g = construct_named(e.spec);
    TowerRun run = run_tower(g, run_limits);
    SurveyRow row;
    row.spec = e.spec;
    row.order = g->order();
    row.center_order = static_cast<int>(g->center_members().size());
    row.status = run.status;
    row.termination = run.termination;
    for (const TowerBlock& b : run.blocks) {
      std::vector<int> orders;
      for (const GroupPtr& st : b.stages) orders.push_back(st->order());
      row.stage_orders.push_back(std::move(orders));
      if (b.period) row.periods.push_back({b.period->n, b.period->m});
    }
    for (size_t t = 0; t < run.blocks[0].stages.size(); ++t)
      if (run.blocks[0].stages[t]->center_members().size() == 1) {
        row.centerless_onset = static_cast<int>(t);
        break;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace towerlab
