#pragma once

#include <string>

#include "towerlab/config.hpp"
#include "towerlab/group.hpp"

namespace towerlab {

// Builds a named group from a spec string. Grammar (case-sensitive):
//   T              trivial group
//   C<n>           cyclic, 1 <= n <= 512
//   D<n>           dihedral of order n, n even, 4 <= n <= 512
//   Dic<n>         dicyclic of order 4n, 2 <= n <= 128 (Dic2 = Q8)
//   Q8             quaternion group (alias of Dic2)
//   S<n>, A<n>     symmetric / alternating, 1 <= n <= 6
//   <a>x<b>x...    direct product, folded left, total order <= max_product_order
//
// Element numbering is fixed per family:
//   C<n>:  i = g^i.
//   D<n>:  0..m-1 are rotations r^i (m = n/2), m..n-1 are reflections r^i s.
//   Dic<n>: 0..2n-1 are a^i, 2n..4n-1 are a^i b.
//   S<n>/A<n>: permutations of {0..n-1} sorted lexicographically by one-line
//     notation; the product p*q acts as p after q.
//   Products: index = a * |B| + b for (a, b) in A x B.
GroupPtr construct_named(const std::string& spec, const Limits& limits = {});

}  // namespace towerlab
