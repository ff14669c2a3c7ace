#include "bjorling/split_complex.hpp"

#include <algorithm>
#include <cmath>

namespace bjorling {

SplitComplex inverse(const SplitComplex& z) {
  const double a2 = z.re * z.re;
  const double b2 = z.im * z.im;
  const double det = a2 - b2;
  if (std::abs(det) <= 1e-12 * std::max(1.0, a2 + b2)) {
    throw ZeroDivisor("split-complex number lies on the light cone (re^2 = im^2) and has no inverse");
  }
  return {z.re / det, -z.im / det};
}

SplitComplex operator/(const SplitComplex& a, const SplitComplex& b) { return mul(a, inverse(b)); }

std::ostream& operator<<(std::ostream& os, const SplitComplex& z) {
  return os << z.re << (std::signbit(z.im) ? " - " : " + ") << std::abs(z.im) << "k'";
}

}  // namespace bjorling
