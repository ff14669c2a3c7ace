#pragma once

#include <optional>
#include <ostream>

#include "bjorling/domain.hpp"
#include "bjorling/error.hpp"

namespace bjorling {

/// Element re + k' im of the split-complex ring, k'^2 = 1.
///
/// The ring is commutative but not a field: every multiple of (1 + k') or
/// (1 - k') is a zero divisor. Null coordinates x = re + im, y = re - im
/// diagonalise multiplication, which is what makes the extension of real
/// analytic functions a two-point evaluation.
struct SplitComplex {
  double re = 0.0;
  double im = 0.0;

  constexpr SplitComplex() = default;
  constexpr SplitComplex(double real) : re(real) {}  // NOLINT(google-explicit-constructor)
  constexpr SplitComplex(double real, double imag) : re(real), im(imag) {}

  constexpr SplitComplex& operator+=(const SplitComplex& o) noexcept {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr SplitComplex& operator-=(const SplitComplex& o) noexcept {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr SplitComplex& operator*=(double k) noexcept {
    re *= k;
    im *= k;
    return *this;
  }

  constexpr bool operator==(const SplitComplex&) const = default;
};

inline constexpr SplitComplex k_prime{0.0, 1.0};

constexpr SplitComplex operator+(SplitComplex a, const SplitComplex& b) noexcept { return a += b; }
constexpr SplitComplex operator-(SplitComplex a, const SplitComplex& b) noexcept { return a -= b; }
constexpr SplitComplex operator-(const SplitComplex& a) noexcept { return {-a.re, -a.im}; }
constexpr SplitComplex operator*(SplitComplex a, double k) noexcept { return a *= k; }
constexpr SplitComplex operator*(double k, SplitComplex a) noexcept { return a *= k; }

constexpr SplitComplex mul(const SplitComplex& a, const SplitComplex& b) noexcept {
  return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr SplitComplex operator*(const SplitComplex& a, const SplitComplex& b) noexcept {
  return mul(a, b);
}

constexpr SplitComplex conj(const SplitComplex& z) noexcept { return {z.re, -z.im}; }

/// Signed squared modulus |re + k' im|^2 = im^2 - re^2.
constexpr double modulus_sq(const SplitComplex& z) noexcept { return z.im * z.im - z.re * z.re; }

/// (a + k'b)^-1 = (a - k'b) / (a^2 - b^2). Throws ZeroDivisor when
/// |a^2 - b^2| <= 1e-12 max(1, a^2 + b^2).
SplitComplex inverse(const SplitComplex& z);

SplitComplex operator/(const SplitComplex& a, const SplitComplex& b);

struct NullCoords {
  double x = 0.0;
  double y = 0.0;
};

constexpr NullCoords to_null(const SplitComplex& z) noexcept { return {z.re + z.im, z.re - z.im}; }
constexpr SplitComplex from_null(double x, double y) noexcept {
  return {0.5 * (x + y), 0.5 * (x - y)};
}

/// Unique split-holomorphic extension of a real function f:
///   f(t + k's) = (f(x) + f(y))/2 + k' (f(x) - f(y))/2,  x = t + s, y = t - s.
/// When `domain` is given, both null coordinates must lie in it.
template <class F>
SplitComplex extend(F&& f, const SplitComplex& z, std::optional<Interval> domain = std::nullopt) {
  const auto [x, y] = to_null(z);
  if (domain && !(domain->contains(x) && domain->contains(y))) {
    throw DomainError("split-holomorphic extension needs both null coordinates in [" +
                      std::to_string(domain->lo) + ", " + std::to_string(domain->hi) + "]");
  }
  const double fx = static_cast<double>(f(x));
  const double fy = static_cast<double>(f(y));
  return {0.5 * (fx + fy), 0.5 * (fx - fy)};
}

std::ostream& operator<<(std::ostream& os, const SplitComplex& z);

}  // namespace bjorling
