#pragma once

#include <compare>
#include <string>

namespace towerlab {

// Ordinals below omega^2, written omega * limit_part + finite_part.
// Ordering is lexicographic on (limit_part, finite_part).
struct Ordinal {
  int limit_part = 0;
  int finite_part = 0;

  auto operator<=>(const Ordinal&) const = default;

  // "0", "3", "w", "w+1", "w*2+3", ...
  std::string to_string() const;
};

}  // namespace towerlab
