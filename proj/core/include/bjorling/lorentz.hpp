#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string_view>

namespace bjorling {

/// Vector of Lorentz-Minkowski 3-space in canonical coordinates. The
/// first coordinate is the time direction: <u, v> = -u1 v1 + u2 v2 + u3 v3.
struct LVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr double operator[](int i) const noexcept { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  constexpr LVec3& operator+=(const LVec3& o) noexcept {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LVec3& operator-=(const LVec3& o) noexcept {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LVec3& operator*=(double k) noexcept {
    x1 *= k;
    x2 *= k;
    x3 *= k;
    return *this;
  }

  constexpr bool operator==(const LVec3&) const = default;
};

constexpr LVec3 operator+(LVec3 a, const LVec3& b) noexcept { return a += b; }
constexpr LVec3 operator-(LVec3 a, const LVec3& b) noexcept { return a -= b; }
constexpr LVec3 operator-(const LVec3& a) noexcept { return {-a.x1, -a.x2, -a.x3}; }
constexpr LVec3 operator*(LVec3 a, double k) noexcept { return a *= k; }
constexpr LVec3 operator*(double k, LVec3 a) noexcept { return a *= k; }
constexpr LVec3 operator/(LVec3 a, double k) noexcept { return a *= (1.0 / k); }

inline constexpr LVec3 e1{1.0, 0.0, 0.0};
inline constexpr LVec3 e2{0.0, 1.0, 0.0};
inline constexpr LVec3 e3{0.0, 0.0, 1.0};

constexpr double inner(const LVec3& u, const LVec3& v) noexcept {
  return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

/// Lorentzian cross product, characterised by <u x v, w> = det[u; v; w]
/// for every w. Lowering the index of the Euclidean cofactor vector flips
/// the sign of the time component only.
constexpr LVec3 cross(const LVec3& u, const LVec3& v) noexcept {
  return {-(u.x2 * v.x3 - u.x3 * v.x2), u.x3 * v.x1 - u.x1 * v.x3, u.x1 * v.x2 - u.x2 * v.x1};
}

constexpr double euclidean_norm_sq(const LVec3& v) noexcept {
  return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
}
inline double euclidean_norm(const LVec3& v) noexcept { return std::sqrt(euclidean_norm_sq(v)); }
inline double distance(const LVec3& a, const LVec3& b) noexcept { return euclidean_norm(a - b); }

/// sqrt(|<v, v>|).
inline double lorentz_length(const LVec3& v) noexcept { return std::sqrt(std::abs(inner(v, v))); }

enum class CausalCharacter { timelike, spacelike, null };

std::string_view to_string(CausalCharacter c) noexcept;

/// Default null tolerance: 1e-10 max(1, |v|_E^2).
double causal_tolerance(const LVec3& v) noexcept;

CausalCharacter causal_character(const LVec3& v) noexcept;
CausalCharacter causal_character(const LVec3& v, double eps) noexcept;

/// Null frame L1 = (-1, 1, 0)/sqrt2, L2 = (1, 1, 0)/sqrt2, L3 = e3 with
/// L1, L2 null, <L1, L2> = 1 and L3 unit spacelike.
inline constexpr double half_sqrt2 = 0.70710678118654752440;
inline constexpr LVec3 null_L1{-half_sqrt2, half_sqrt2, 0.0};
inline constexpr LVec3 null_L2{half_sqrt2, half_sqrt2, 0.0};
inline constexpr LVec3 null_L3{0.0, 0.0, 1.0};

/// p1 L1 + p2 L2 + p3 L3.
constexpr LVec3 null_frame_to_canonical(const LVec3& p) noexcept {
  return p.x1 * null_L1 + p.x2 * null_L2 + p.x3 * null_L3;
}

std::ostream& operator<<(std::ostream& os, const LVec3& v);

}  // namespace bjorling
