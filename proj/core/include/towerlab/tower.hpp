#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/automorphism.hpp"
#include "towerlab/config.hpp"
#include "towerlab/group.hpp"
#include "towerlab/hom.hpp"
#include "towerlab/ordinal.hpp"

namespace towerlab {

// A detected repetition inside one block: stage n is isomorphic to stage m
// (n < m) via theta. Chosen as the earliest repeat: smallest m, then
// smallest n.
struct Period {
  int n = 0;
  int m = 0;
  Homomorphism theta;  // stage n -> stage m
};

// Direct limit data of a periodic block. The colimit group is the eventual
// image E of the folding endomorphism phi = theta^-1 after pi_{n,m},
// materialized as a group in its own right. proj[t] maps block stage t onto
// the colimit and satisfies proj[t] = proj[t'] after pi_{t,t'} for t <= t'.
struct Colimit {
  GroupPtr group;
  int exponent = 0;                // least k with im(phi^k) = im(phi^k+1)
  std::vector<int> embedding;      // colimit element -> anchor-stage element
  std::vector<Homomorphism> proj;  // one per stage of the block
};

// One run segment between limit ordinals: stages G_0..G_T with successor
// maps pi_t: G_t -> G_{t+1} (the natural map into the automorphism group).
struct TowerBlock {
  std::vector<GroupPtr> stages;
  std::vector<Homomorphism> succ;  // succ[t]: stages[t] -> stages[t+1]
  std::optional<Period> period;
  std::optional<Colimit> colimit;
};

enum class TowerStatus {
  terminated,         // a stage with bijective natural map was reached
  no_period_found,    // a block ran out of stages without repeating
  budget_exhausted,   // the limit-block budget ran out
  aut_cap_exceeded,   // an automorphism computation hit the order cap
};

std::string to_string(TowerStatus s);

// A computed automorphism tower. Block j covers ordinals w*j + t; stage 0 of
// block j+1 is the colimit group of block j. When status == terminated,
// termination holds the least ordinal whose successor map is bijective.
struct TowerRun {
  GroupPtr base;
  std::vector<TowerBlock> blocks;
  TowerStatus status = TowerStatus::no_period_found;
  std::optional<Ordinal> termination;

  const GroupPtr& stage(const Ordinal& a) const;
  bool has_stage(const Ordinal& a) const;
};

// Iterates G -> Aut(G) for at most max_stages stages (stage count, G_0
// included; at least one successor step is always taken). Stops early once
// a successor map is bijective. No period detection.
TowerBlock ascend_finite(const GroupPtr& g, int max_stages,
                         const Limits& limits = {});

// Earliest isomorphic repeat among the block's stages, or nullopt.
std::optional<Period> detect_period(const TowerBlock& block);

// Direct limit of a periodic block. Folds the tail into the endomorphism
// phi = theta^-1 after pi_{n,m} of stage n, takes the eventual image E of
// the chain im(phi) >= im(phi^2) >= ..., and projects every block stage
// onto E. phi restricted to E is bijective and the projection
// (phi|E)^-k after phi^k is independent of k once the chain is stable
// (asserted internally).
Colimit limit_colimit(const TowerBlock& block, const Period& period);

// Full driver: alternates finite ascent, period detection and colimits,
// within the configured budgets. Cap errors from automorphism computations
// are recorded as status aut_cap_exceeded with all partial results kept.
TowerRun run_tower(const GroupPtr& g, const Limits& limits = {});

// The composed map pi_{from,to} between two computed stages, crossing limit
// stages through the stored colimit projections. from <= to required;
// equal endpoints yield the identity.
Homomorphism compose_maps(const TowerRun& run, const Ordinal& from,
                          const Ordinal& to);

// Vanishing diagnostics over the finite prefix of block 0. For stage
// t < horizon, members lists the elements that map to the identity at or
// before stage `horizon`, each tagged with the least stage where that
// happens; f is the maximum such stage (the identity vanishes at t + 1, so
// members is never empty and f > t).
struct VanishingRow {
  int stage = 0;
  std::vector<std::pair<int, int>> members;  // (element, least vanishing stage)
  int f = 0;
};

struct VanishingReport {
  int horizon = 0;
  std::vector<VanishingRow> rows;
};

VanishingReport vanishing_spectrum(const TowerRun& run, int horizon);

}  // namespace towerlab
