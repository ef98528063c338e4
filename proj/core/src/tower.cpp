#include "towerlab/tower.hpp"

#include <algorithm>

namespace towerlab {

std::string to_string(TowerStatus s) {
  switch (s) {
    case TowerStatus::terminated: return "terminated";
    case TowerStatus::no_period_found: return "no-period-found";
    case TowerStatus::budget_exhausted: return "budget-exhausted";
    case TowerStatus::aut_cap_exceeded: return "aut-cap-exceeded";
  }
  return "unknown";
}

const GroupPtr& TowerRun::stage(const Ordinal& a) const {
  if (!has_stage(a)) throw Error("tower stage " + a.to_string() + " was not computed");
  return blocks[a.limit_part].stages[a.finite_part];
}

bool TowerRun::has_stage(const Ordinal& a) const {
  return a.limit_part >= 0 &&
         a.limit_part < static_cast<int>(blocks.size()) &&
         a.finite_part >= 0 &&
         a.finite_part <
             static_cast<int>(blocks[a.limit_part].stages.size());
}

namespace {

enum class StepOutcome { stepped, cap_hit };

// Appends Aut(last stage) and the natural map to the block.
StepOutcome take_step(TowerBlock& b, const Limits& limits) {
  try {
    AutGroup aut = automorphism_group(b.stages.back(), limits);
    b.succ.push_back(inner_homomorphism(aut));
    b.stages.push_back(aut.group);
    return StepOutcome::stepped;
  } catch (const CapError&) {
    return StepOutcome::cap_hit;
  }
}

}  // namespace

TowerBlock ascend_finite(const GroupPtr& g, int max_stages,
                         const Limits& limits) {
  if (max_stages < 1) throw Error("tower: max_stages must be at least 1");
  TowerBlock b;
  b.stages = {g};
  while (b.succ.empty() ||
         (static_cast<int>(b.stages.size()) < max_stages &&
          !is_bijective(b.succ.back()))) {
    AutGroup aut = automorphism_group(b.stages.back(), limits);
    b.succ.push_back(inner_homomorphism(aut));
    b.stages.push_back(aut.group);
  }
  return b;
}

std::optional<Period> detect_period(const TowerBlock& block) {
  const int top = static_cast<int>(block.stages.size()) - 1;
  for (int m = 1; m <= top; ++m)
    for (int n = 0; n < m; ++n) {
      auto iso = find_isomorphism(block.stages[n], block.stages[m]);
      if (iso) return Period{n, m, std::move(*iso)};
    }
  return std::nullopt;
}

Colimit limit_colimit(const TowerBlock& block, const Period& period) {
  const int n = period.n, m = period.m;
  const int top = static_cast<int>(block.stages.size()) - 1;
  if (n < 0 || n >= m || m > top) throw Error("colimit: bad period indices");
  if (period.theta.source != block.stages[n] ||
      period.theta.target != block.stages[m] ||
      !is_bijective(period.theta))
    throw Error("colimit: theta is not an isomorphism between the period stages");

  const GroupPtr& gn = block.stages[n];
  const int N = gn->order();

  Homomorphism pi_nm = identity_hom(gn);
  for (int t = n; t < m; ++t) pi_nm = hom_then(pi_nm, block.succ[t]);
  Homomorphism phi = hom_then(pi_nm, hom_inverse(period.theta));

  // Eventual image of the folding endomorphism: iterate until the image
  // set of phi^k stops shrinking.
  auto image_of = [N](const std::vector<int>& f) {
    std::vector<char> in(N, 0);
    for (int x = 0; x < N; ++x) in[f[x]] = 1;
    std::vector<int> out;
    for (int x = 0; x < N; ++x)
      if (in[x]) out.push_back(x);
    return out;
  };
  std::vector<int> fk(N);
  for (int x = 0; x < N; ++x) fk[x] = x;  // phi^0
  std::vector<int> im_k = image_of(fk);
  int k = 0;
  while (true) {
    std::vector<int> fk1(N);
    for (int x = 0; x < N; ++x) fk1[x] = phi.image[fk[x]];
    std::vector<int> im_k1 = image_of(fk1);
    if (im_k1 == im_k) break;
    fk = std::move(fk1);
    im_k = std::move(im_k1);
    ++k;
  }

  const std::vector<int>& members = im_k;  // the eventual image E, sorted
  const int E = static_cast<int>(members.size());
  std::vector<int> idx(N, -1);
  for (int i = 0; i < E; ++i) idx[members[i]] = i;

  // phi restricted to E is a bijection E -> E.
  std::vector<int> phi_e(E), phi_e_inv(E, -1);
  for (int i = 0; i < E; ++i) {
    int y = phi.image[members[i]];
    if (y < 0 || idx[y] < 0) throw Error("colimit: eventual image is not stable");
    phi_e[i] = idx[y];
  }
  for (int i = 0; i < E; ++i) {
    if (phi_e_inv[phi_e[i]] != -1)
      throw Error("colimit: folding map is not injective on the eventual image");
    phi_e_inv[phi_e[i]] = i;
  }

  auto pow_inv = [&](int times) {
    std::vector<int> p(E);
    for (int i = 0; i < E; ++i) p[i] = i;
    for (int r = 0; r < times; ++r) {
      std::vector<int> q(E);
      for (int i = 0; i < E; ++i) q[i] = phi_e_inv[p[i]];
      p = std::move(q);
    }
    return p;
  };
  std::vector<int> inv_k = pow_inv(k);
  std::vector<int> inv_k1 = pow_inv(k + 1);

  // The anchor-stage projection mu0 = (phi|E)^-k after phi^k. Its value is
  // independent of the power used once the chain is stable; spot-check that
  // k and k+1 agree.
  std::vector<int> mu0(N);
  for (int x = 0; x < N; ++x) mu0[x] = inv_k[idx[fk[x]]];
  for (int x = 0; x < N; ++x) {
    int via_k1 = inv_k1[idx[phi.image[fk[x]]]];
    if (via_k1 != mu0[x])
      throw Error("colimit: projection is not power-independent");
  }

  // Materialize E as a group of its own.
  std::vector<int> flat(static_cast<size_t>(E) * E);
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) {
      int v = idx[gn->op(members[i], members[j])];
      if (v < 0) throw Error("colimit: eventual image is not closed");
      flat[static_cast<size_t>(i) * E + j] = v;
    }
  std::vector<std::string> names;
  if (gn->has_names()) {
    names.reserve(E);
    for (int i = 0; i < E; ++i) names.push_back(gn->names()[members[i]]);
  }
  GroupPtr colim = FiniteGroup::trusted(std::move(flat), E, std::move(names));

  Colimit c;
  c.group = colim;
  c.exponent = k;
  c.embedding = members;

  // Projection of stage t onto the colimit:
  //   t <= n:      mu0 after pi_{t,n}
  //   n < t <= m:  (phi|E)^-(k+1) after phi^k after theta^-1 after pi_{t,m}
  // Both satisfy proj[t] = proj[t+1] after succ[t], which is re-verified
  // below.
  Homomorphism theta_inv = hom_inverse(period.theta);
  for (int t = 0; t <= top; ++t) {
    const GroupPtr& gt = block.stages[t];
    std::vector<int> table(gt->order());
    if (t <= n) {
      Homomorphism pi_tn = identity_hom(gt);
      for (int s = t; s < n; ++s) pi_tn = hom_then(pi_tn, block.succ[s]);
      for (int x = 0; x < gt->order(); ++x) table[x] = mu0[pi_tn.image[x]];
    } else {
      Homomorphism pi_tm = identity_hom(gt);
      for (int s = t; s < m; ++s) pi_tm = hom_then(pi_tm, block.succ[s]);
      for (int x = 0; x < gt->order(); ++x)
        table[x] = inv_k1[idx[fk[theta_inv.image[pi_tm.image[x]]]]];
    }
    c.proj.push_back(make_homomorphism(gt, colim, std::move(table)));
  }
  for (int t = 0; t < top; ++t)
    if (hom_then(block.succ[t], c.proj[t + 1]).image != c.proj[t].image)
      throw Error("colimit: projections violate the cocycle law");

  // Every element of the colimit is hit by the anchor projection.
  std::vector<char> hit(E, 0);
  for (int x = 0; x < N; ++x) hit[c.proj[n].image[x]] = 1;
  for (int i = 0; i < E; ++i)
    if (!hit[i]) throw Error("colimit: anchor projection is not surjective");

  return c;
}

TowerRun run_tower(const GroupPtr& g, const Limits& limits) {
  TowerRun run;
  run.base = g;
  GroupPtr cur = g;
  for (int blk = 0; blk < limits.max_limit_blocks; ++blk) {
    TowerBlock b;
    b.stages = {cur};
    bool terminated = false, cap = false;
    while (true) {
      if (!b.succ.empty()) {
        if (is_bijective(b.succ.back())) {
          terminated = true;
          run.termination =
              Ordinal{blk, static_cast<int>(b.succ.size()) - 1};
          break;
        }
        const int mm = static_cast<int>(b.stages.size()) - 1;
        for (int nn = 0; nn < mm && !b.period; ++nn) {
          auto iso = find_isomorphism(b.stages[nn], b.stages[mm]);
          if (iso) b.period = Period{nn, mm, std::move(*iso)};
        }
        if (b.period) break;
      }
      if (static_cast<int>(b.stages.size()) >= limits.max_stages_per_block)
        break;
      if (take_step(b, limits) == StepOutcome::cap_hit) {
        cap = true;
        break;
      }
    }

    if (terminated) {
      run.blocks.push_back(std::move(b));
      run.status = TowerStatus::terminated;
      return run;
    }
    if (cap) {
      run.blocks.push_back(std::move(b));
      run.status = TowerStatus::aut_cap_exceeded;
      return run;
    }
    if (!b.period) {
      run.blocks.push_back(std::move(b));
      run.status = TowerStatus::no_period_found;
      return run;
    }
    b.colimit = limit_colimit(b, *b.period);
    cur = b.colimit->group;
    run.blocks.push_back(std::move(b));
  }
  run.status = TowerStatus::budget_exhausted;
  return run;
}

Homomorphism compose_maps(const TowerRun& run, const Ordinal& from,
                          const Ordinal& to) {
  if (!run.has_stage(from) || !run.has_stage(to))
    throw Error("compose: endpoint stage was not computed");
  if (to < from) throw Error("compose: from must not exceed to");
  Homomorphism acc = identity_hom(run.stage(from));
  int blk = from.limit_part;
  int t = from.finite_part;
  while (blk < to.limit_part) {
    const TowerBlock& b = run.blocks[blk];
    if (!b.colimit)
      throw Error("compose: no colimit links block " + std::to_string(blk) +
                  " to the next");
    acc = hom_then(acc, b.colimit->proj[t]);
    ++blk;
    t = 0;
  }
  const TowerBlock& b = run.blocks[blk];
  for (; t < to.finite_part; ++t) acc = hom_then(acc, b.succ[t]);
  return acc;
}

VanishingReport vanishing_spectrum(const TowerRun& run, int horizon) {
  if (run.blocks.empty()) throw Error("vanishing: empty tower run");
  const TowerBlock& b0 = run.blocks[0];
  if (horizon < 1 ||
      horizon > static_cast<int>(b0.succ.size()))
    throw Error("vanishing: horizon exceeds the computed finite stages");
  VanishingReport rep;
  rep.horizon = horizon;
  for (int t = 0; t < horizon; ++t) {
    VanishingRow row;
    row.stage = t;
    const int order_t = b0.stages[t]->order();
    for (int x = 0; x < order_t; ++x) {
      int y = x;
      for (int s = t + 1; s <= horizon; ++s) {
        y = b0.succ[s - 1].image[y];
        if (y == 0) {
          row.members.push_back({x, s});
          break;
        }
      }
    }
    for (const auto& [elem, s] : row.members) row.f = std::max(row.f, s);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace towerlab
