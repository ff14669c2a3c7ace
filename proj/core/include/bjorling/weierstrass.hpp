#pragma once

#include <cstddef>
#include <optional>

#include "bjorling/curve.hpp"
#include "bjorling/surface.hpp"

namespace bjorling {

struct WeierstrassOptions {
  double tol = 1e-10;
  std::size_t nodes = 2048;
  int samples = 201;       // isotropy samples along the interval
  int grid = 41;           // conformality samples per side of the rectangle
  double isotropy_tol = 1e-9;
  std::optional<Rect> domain;
};

/// Surface from split-holomorphic data written in null coordinates,
///   phi(t + k's) = F(x) + G(y) + k'(F(x) - G(y)),  x = t + s, y = t - s,
/// i.e. X = 2 Re int phi = 2 (int_{t0}^{x} F + int_{t0}^{y} G).
///
/// Isotropy of phi is <F, F> = <G, G> = 0 (checked on the interval, relative
/// to max(1, |F|_E^2)); the timelike condition is <F(x), G(y)> < 0 (checked
/// on a grid of the rectangle). Violations raise IsotropyViolation or
/// ConformalityViolation with the worst sample. Only values of F and G are
/// used.
Surface weierstrass_surface(const Curve& F, const Curve& G, double basepoint,
                            const WeierstrassOptions& opts = {});

}  // namespace bjorling
