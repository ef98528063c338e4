#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "towerlab/error.hpp"

namespace towerlab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Isomorphism-invariant summary used to gate isomorphism searches and to
// describe tower stages in reports. Two isomorphic groups always compare
// equal; the converse is not guaranteed.
struct Fingerprint {
  int order = 0;
  bool abelian = false;
  int center_order = 0;
  std::vector<int> element_orders;  // sorted ascending
  std::vector<int> class_sizes;     // conjugacy class sizes, sorted ascending
  bool operator==(const Fingerprint&) const = default;
};

// A finite group presented by its full Cayley table. Immutable once built.
// Conventions: elements are 0..order-1, the identity is element 0,
// table(a, b) is the product a*b. Derived per-element data (orders, class
// sizes, square-root counts) is precomputed at construction.
class FiniteGroup {
 public:
  // Trusted constructor: assumes the table is a valid group table with
  // identity 0. Use from_cayley_table() for unvalidated input.
  static GroupPtr trusted(std::vector<int> flat_table, int order,
                          std::vector<std::string> names = {});

  int order() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return op(op(g, x), inv_[g]); }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

  int element_order(int x) const { return elem_order_[x]; }
  int class_size(int x) const { return class_size_[x]; }
  bool abelian() const { return abelian_; }
  const std::vector<int>& center_members() const { return center_; }

  // Automorphism-invariant profile of one element: order, conjugacy class
  // size, number of square roots, order of the square, class size of the
  // square. Any isomorphism maps an element to one with an equal profile.
  using ElementProfile = std::array<int, 5>;
  const ElementProfile& profile(int x) const { return profile_[x]; }

  const std::vector<int>& flat_table() const { return table_; }

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<int> elem_order_;
  std::vector<int> class_size_;
  std::vector<ElementProfile> profile_;
  std::vector<int> center_;
  bool abelian_ = false;
};

// A subgroup given by its sorted member list inside a parent group.
// Membership of the identity and closure are established at construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending, always contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& o) const {
    return parent == o.parent && members == o.members;
  }
};

// Validating constructor for untrusted tables. Checks, in order: shape,
// identity at index 0, Latin-square rows and columns, associativity
// (Light's test over a generating set), two-sided inverses, and name-list
// length. Each failure throws Error with a distinct message.
GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                           const std::vector<std::string>& names = {});

// Subgroup constructors and pointwise scans. All scans are exhaustive over
// the parent's elements; results are sorted member lists.
Subgroup center(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup centralizer_in(const GroupPtr& g, const Subgroup& s);
Subgroup normalizer_in(const GroupPtr& g, const Subgroup& s);

// Wraps a raw member list as a Subgroup, verifying closure under product.
Subgroup as_subgroup(const GroupPtr& g, std::vector<int> members);

Fingerprint fingerprint(const FiniteGroup& g);

// Lexicographically first generating set of minimum cardinality, searched
// over increasing sizes. Deterministic. The trivial group yields {}.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

}  // namespace towerlab
