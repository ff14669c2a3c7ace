#pragma once

#include <algorithm>
#include <cmath>

namespace bjorling {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const noexcept { return hi - lo; }
  constexpr double mid() const noexcept { return 0.5 * (lo + hi); }

  /// Membership with a relative slack so that t +- s computed in floating
  /// point at a rectangle corner still lands inside.
  bool contains(double x) const noexcept {
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    return x >= lo - slack && x <= hi + slack;
  }

  bool contains(const Interval& other) const noexcept {
    return contains(other.lo) && contains(other.hi);
  }

  constexpr bool operator==(const Interval&) const = default;
};

inline Interval intersect(const Interval& a, const Interval& b) noexcept {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Parameter rectangle [t0, t1] x [s0, s1].
struct Rect {
  double t0 = 0.0;
  double t1 = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;

  constexpr double t_width() const noexcept { return t1 - t0; }
  constexpr double s_width() const noexcept { return s1 - s0; }
  constexpr bool operator==(const Rect&) const = default;
};

}  // namespace bjorling
