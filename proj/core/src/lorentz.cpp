#include "bjorling/lorentz.hpp"

#include <algorithm>

namespace bjorling {

std::string_view to_string(CausalCharacter c) noexcept {
  switch (c) {
    case CausalCharacter::timelike:
      return "timelike";
    case CausalCharacter::spacelike:
      return "spacelike";
    case CausalCharacter::null:
      return "null";
  }
  return "null";
}

double causal_tolerance(const LVec3& v) noexcept {
  return 1e-10 * std::max(1.0, euclidean_norm_sq(v));
}

CausalCharacter causal_character(const LVec3& v, double eps) noexcept {
  const double q = inner(v, v);
  if (q < -eps) return CausalCharacter::timelike;
  if (q > eps) return CausalCharacter::spacelike;
  return CausalCharacter::null;
}

CausalCharacter causal_character(const LVec3& v) noexcept {
  return causal_character(v, causal_tolerance(v));
}

std::ostream& operator<<(std::ostream& os, const LVec3& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

}  // namespace bjorling
