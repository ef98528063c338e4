#include "towerlab/group.hpp"

#include <algorithm>
#include <numeric>

namespace towerlab {

GroupPtr FiniteGroup::trusted(std::vector<int> flat_table, int order,
                              std::vector<std::string> names) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->table_ = std::move(flat_table);
  g->names_ = std::move(names);

  const int n = order;
  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g->op(a, b) == 0) {
        g->inv_[a] = b;
        break;
      }
    }
  }

  g->elem_order_.assign(n, 1);
  for (int x = 1; x < n; ++x) {
    int o = 1, y = x;  // y = x^o throughout
    while (y != 0) {
      y = g->op(y, x);
      ++o;
    }
    g->elem_order_[x] = o;
  }

  g->class_size_.assign(n, 0);
  std::vector<int> cls(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cls[x] != -1) continue;
    std::vector<int> members;
    std::vector<char> seen(n, 0);
    for (int h = 0; h < n; ++h) {
      int y = g->conj(h, x);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
    for (int m : members) {
      cls[m] = x;
      g->class_size_[m] = static_cast<int>(members.size());
    }
  }

  g->abelian_ = true;
  for (int x = 0; x < n && g->abelian_; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g->op(x, y) != g->op(y, x)) {
        g->abelian_ = false;
        break;
      }

  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n; ++y)
      if (g->op(x, y) != g->op(y, x)) {
        central = false;
        break;
      }
    if (central) g->center_.push_back(x);
  }

  std::vector<int> sqrt_count(n, 0);
  for (int x = 0; x < n; ++x) ++sqrt_count[g->op(x, x)];
  g->profile_.resize(n);
  for (int x = 0; x < n; ++x) {
    int sq = g->op(x, x);
    g->profile_[x] = {g->elem_order_[x], g->class_size_[x], sqrt_count[x],
                      g->elem_order_[sq], g->class_size_[sq]};
  }

  return g;
}

namespace {

// Closure of {0} union gens under right multiplication, as a sorted list.
std::vector<int> close_under(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.op(x, s);
        if (!in[y]) {
          in[y] = 1;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace

GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                           const std::vector<std::string>& names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("cayley table: table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw Error("cayley table: table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw Error("cayley table: entry out of range");
  for (int j = 0; j < n; ++j)
    if (table[0][j] != j || table[j][0] != j)
      throw Error("cayley table: element 0 is not a two-sided identity");
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        throw Error("cayley table: row is not a permutation");
      row_seen[table[i][j]] = 1;
      if (col_seen[table[j][i]])
        throw Error("cayley table: column is not a permutation");
      col_seen[table[j][i]] = 1;
    }
  }

  // Light's associativity test: with rows and columns known to be
  // permutations, checking a*(g*b) == (a*g)*b for every g in a generating
  // set of the magma proves full associativity.
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = table[i][j];
  auto op = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };

  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::vector<int> gens;
  for (int cand = 1; cand < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    // close under right multiplication by all chosen generators
    std::vector<int> frontier;
    for (int x = 0; x < n; ++x)
      if (reached[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int s : gens) {
          int y = op(x, s);
          if (!reached[y]) {
            reached[y] = 1;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  for (int g : gens)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (op(a, op(g, b)) != op(op(a, g), b))
          throw Error("cayley table: operation is not associative");

  for (int a = 0; a < n; ++a) {
    bool ok = false;
    for (int b = 0; b < n; ++b)
      if (op(a, b) == 0 && op(b, a) == 0) {
        ok = true;
        break;
      }
    if (!ok) throw Error("cayley table: element has no two-sided inverse");
  }

  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw Error("cayley table: names length mismatch");

  return FiniteGroup::trusted(std::move(flat), n, names);
}

Subgroup center(const GroupPtr& g) {
  return Subgroup{g, g->center_members()};
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g->order()) throw Error("generator out of range");
  return Subgroup{g, close_under(*g, gens)};
}

Subgroup centralizer_in(const GroupPtr& g, const Subgroup& s) {
  if (s.parent != g) throw Error("subgroup does not live in this group");
  std::vector<int> out;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : s.members)
      if (g->op(x, m) != g->op(m, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{g, std::move(out)};
}

Subgroup normalizer_in(const GroupPtr& g, const Subgroup& s) {
  if (s.parent != g) throw Error("subgroup does not live in this group");
  std::vector<char> in(g->order(), 0);
  for (int m : s.members) in[m] = 1;
  std::vector<int> out;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : s.members)
      if (!in[g->conj(x, m)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{g, std::move(out)};
}

Subgroup as_subgroup(const GroupPtr& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int m : members)
    if (m < 0 || m >= g->order()) throw Error("subgroup member out of range");
  if (members.empty() || members[0] != 0)
    throw Error("subgroup must contain the identity");
  std::vector<char> in(g->order(), 0);
  for (int m : members) in[m] = 1;
  for (int a : members)
    for (int b : members)
      if (!in[g->op(a, b)]) throw Error("subgroup not closed under product");
  return Subgroup{g, std::move(members)};
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.abelian();
  f.center_order = static_cast<int>(g.center_members().size());
  f.element_orders.reserve(g.order());
  f.class_sizes.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    f.element_orders.push_back(g.element_order(x));
    f.class_sizes.push_back(g.class_size(x));
  }
  std::sort(f.element_orders.begin(), f.element_orders.end());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

namespace {

bool search_gen_set(const FiniteGroup& g, int k, int from,
                    std::vector<int>& chosen, std::vector<char>& reached,
                    int reached_count, std::vector<int>& out) {
  if (reached_count == g.order()) {
    // Fewer than k generators already suffice; the k-1 pass would have
    // found this set, so reject it here to keep cardinality exact.
    return false;
  }
  int remaining = k - static_cast<int>(chosen.size());
  if (remaining == 0) return false;
  // Each useful generator at least doubles the closure (index >= 2), so a
  // prefix whose closure already exceeds |G| / 2^remaining cannot finish
  // with exactly k strictly-enlarging generators.
  long long floor_size = static_cast<long long>(reached_count) << remaining;
  if (floor_size > g.order()) return false;

  for (int cand = from; cand < g.order(); ++cand) {
    if (reached[cand]) continue;  // redundant on top of the prefix
    chosen.push_back(cand);
    std::vector<char> next_reached = reached;
    std::vector<int> frontier;
    for (int x = 0; x < g.order(); ++x)
      if (next_reached[x]) frontier.push_back(x);
    int next_count = reached_count;
    while (!frontier.empty()) {
      std::vector<int> nxt;
      for (int x : frontier)
        for (int s : chosen) {
          int y = g.op(x, s);
          if (!next_reached[y]) {
            next_reached[y] = 1;
            ++next_count;
            nxt.push_back(y);
          }
        }
      frontier = std::move(nxt);
    }
    if (static_cast<int>(chosen.size()) == k) {
      if (next_count == g.order()) {
        out = chosen;
        return true;
      }
    } else if (search_gen_set(g, k, cand + 1, chosen, next_reached, next_count,
                              out)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  for (int k = 1;; ++k) {
    std::vector<int> chosen, out;
    std::vector<char> reached(g.order(), 0);
    reached[0] = 1;
    if (search_gen_set(g, k, 1, chosen, reached, 1, out)) return out;
  }
}

}  // namespace towerlab
