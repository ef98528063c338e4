#include "towerlab/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace towerlab {

namespace {

struct Built {
  int n = 0;
  std::vector<int> table;  // row-major
  std::vector<std::string> names;
  int op(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
};

Built alloc(int n) {
  Built b;
  b.n = n;
  b.table.assign(static_cast<size_t>(n) * n, 0);
  b.names.assign(n, "");
  return b;
}

void set(Built& b, int i, int j, int v) {
  b.table[static_cast<size_t>(i) * b.n + j] = v;
}

Built trivial_group() {
  Built b = alloc(1);
  b.names[0] = "e";
  return b;
}

Built cyclic(int n) {
  Built b = alloc(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) set(b, i, j, (i + j) % n);
  for (int i = 0; i < n; ++i)
    b.names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
  return b;
}

Built dihedral(int order) {
  const int m = order / 2;
  auto idx = [m](int r, int s) { return r + (s ? m : 0); };
  Built b = alloc(order);
  for (int r1 = 0; r1 < m; ++r1)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int r2 = 0; r2 < m; ++r2)
        for (int s2 = 0; s2 < 2; ++s2) {
          int r = s1 == 0 ? (r1 + r2) % m : ((r1 - r2) % m + m) % m;
          int s = s1 == 0 ? s2 : 1 - s2;
          set(b, idx(r1, s1), idx(r2, s2), idx(r, s));
        }
  for (int r = 0; r < m; ++r) {
    std::string rot = r == 0 ? "" : (r == 1 ? "r" : "r" + std::to_string(r));
    b.names[idx(r, 0)] = r == 0 ? "e" : rot;
    b.names[idx(r, 1)] = rot + "s";
  }
  return b;
}

Built dicyclic(int nn) {
  const int n2 = 2 * nn, order = 4 * nn;
  auto idx = [n2](int i, int bb) { return i + (bb ? n2 : 0); };
  auto mod = [n2](int v) { return ((v % n2) + n2) % n2; };
  Built b = alloc(order);
  for (int i = 0; i < n2; ++i)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int j = 0; j < n2; ++j)
        for (int b2 = 0; b2 < 2; ++b2) {
          int r;
          if (b1 == 0 && b2 == 0)
            r = idx(mod(i + j), 0);
          else if (b1 == 0)
            r = idx(mod(i + j), 1);
          else if (b2 == 0)
            r = idx(mod(i - j), 1);
          else
            r = idx(mod(i - j + nn), 0);
          set(b, idx(i, b1), idx(j, b2), r);
        }
  for (int i = 0; i < n2; ++i) {
    std::string ai = i == 0 ? "" : (i == 1 ? "a" : "a" + std::to_string(i));
    b.names[idx(i, 0)] = i == 0 ? "e" : ai;
    b.names[idx(i, 1)] = ai + "b";
  }
  return b;
}

int perm_parity(const std::vector<int>& p) {
  std::vector<int> q = p;
  int par = 0;
  for (size_t i = 0; i < q.size(); ++i)
    while (q[i] != static_cast<int>(i)) {
      std::swap(q[i], q[q[i]]);
      par ^= 1;
    }
  return par;
}

Built permutation_group(int n, bool even_only) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    if (!even_only || perm_parity(p) == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation enumerates in lexicographic order already
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Built b = alloc(order);
  std::vector<int> comp(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
      set(b, i, j, index_of(comp));
    }
  for (int i = 0; i < order; ++i) {
    std::string s;
    for (int k = 0; k < n; ++k) s += std::to_string(perms[i][k]);
    b.names[i] = s;
  }
  return b;
}

Built direct_product(const Built& a, const Built& b) {
  const int n = a.n * b.n;
  Built out = alloc(n);
  for (int a1 = 0; a1 < a.n; ++a1)
    for (int b1 = 0; b1 < b.n; ++b1)
      for (int a2 = 0; a2 < a.n; ++a2)
        for (int b2 = 0; b2 < b.n; ++b2)
          set(out, a1 * b.n + b1, a2 * b.n + b2,
              a.op(a1, a2) * b.n + b.op(b1, b2));
  for (int a1 = 0; a1 < a.n; ++a1)
    for (int b1 = 0; b1 < b.n; ++b1)
      out.names[a1 * b.n + b1] = a.names[a1] + "|" + b.names[b1];
  return out;
}

int parse_suffix_int(const std::string& part, size_t prefix_len,
                     const std::string& what) {
  std::string digits = part.substr(prefix_len);
  if (digits.empty() || digits.size() > 4 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error("bad group spec: " + what + " wants a number, got '" + part +
                "'");
  return std::atoi(digits.c_str());
}

Built build_atom(const std::string& part, const Limits& limits) {
  if (part == "T") return trivial_group();
  if (part == "Q8") return dicyclic(2);
  if (part.rfind("Dic", 0) == 0) {
    int n = parse_suffix_int(part, 3, "Dic<n>");
    if (n < 2 || n > 128)
      throw Error("bad group spec: Dic<n> needs 2 <= n <= 128");
    return dicyclic(n);
  }
  if (part[0] == 'C') {
    int n = parse_suffix_int(part, 1, "C<n>");
    if (n < 1 || n > limits.max_group_order)
      throw Error("bad group spec: C<n> needs 1 <= n <= " +
                  std::to_string(limits.max_group_order));
    return cyclic(n);
  }
  if (part[0] == 'D') {
    int n = parse_suffix_int(part, 1, "D<n>");
    if (n < 4 || n > limits.max_group_order || n % 2 != 0)
      throw Error("bad group spec: D<n> needs even n with 4 <= n <= " +
                  std::to_string(limits.max_group_order));
    return dihedral(n);
  }
  if (part[0] == 'S' || part[0] == 'A') {
    bool alt = part[0] == 'A';
    int n = parse_suffix_int(part, 1, alt ? "A<n>" : "S<n>");
    if (n < 1 || n > 6)
      throw Error("bad group spec: S<n>/A<n> need 1 <= n <= 6");
    return permutation_group(n, alt);
  }
  throw Error("bad group spec: unknown atom '" + part + "'");
}

}  // namespace

GroupPtr construct_named(const std::string& spec, const Limits& limits) {
  if (spec.empty()) throw Error("bad group spec: empty");
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = spec.find('x', start);
    if (pos == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
  for (const auto& p : parts)
    if (p.empty()) throw Error("bad group spec: empty product factor");

  Built acc = build_atom(parts[0], limits);
  if (parts.size() > 1) {
    long long total = acc.n;
    for (size_t i = 1; i < parts.size(); ++i) {
      Built next = build_atom(parts[i], limits);
      total *= next.n;
      if (total > limits.max_product_order)
        throw Error("bad group spec: product order exceeds " +
                    std::to_string(limits.max_product_order));
      acc = direct_product(acc, next);
    }
  }
  return FiniteGroup::trusted(std::move(acc.table), acc.n,
                              std::move(acc.names));
}

}  // namespace towerlab
