#pragma once

namespace towerlab {

// Resource caps shared across the engine. Every cap is a hard bound: an
// operation that would exceed one refuses (CapError) or reports a partial
// result, it never silently truncates.
struct Limits {
  // Largest group order the engine will materialize as a Cayley table.
  // Applies to automorphism-group bases and results, colimit groups and
  // graph automorphism groups. Overridable via TOWERLAB_MAX_ORDER in the CLI.
  int max_group_order = 512;

  // Largest vertex count accepted by the graph automorphism search.
  int max_graph_vertices = 64;

  // Largest order accepted when folding direct products of named groups.
  int max_product_order = 200;

  // Tower budgets: finite stages per block (stage count, G_0 included) and
  // number of limit blocks (block 0 plus up to max_limit_blocks - 1 colimits).
  int max_stages_per_block = 16;
  int max_limit_blocks = 4;

  // Per-stage candidate budget for slot-level normalizer scans. Candidates
  // are ambient elements permuting the orbit blocks of the current stage;
  // a stage whose candidate count exceeds this reports budget exhaustion.
  long long max_slot_candidates = 100000000;
};

}  // namespace towerlab
