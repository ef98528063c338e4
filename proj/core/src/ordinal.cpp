#include "towerlab/ordinal.hpp"

namespace towerlab {

std::string Ordinal::to_string() const {
  if (limit_part == 0) return std::to_string(finite_part);
  std::string s = limit_part == 1 ? "w" : "w*" + std::to_string(limit_part);
  if (finite_part > 0) s += "+" + std::to_string(finite_part);
  return s;
}

}  // namespace towerlab
