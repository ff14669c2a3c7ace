#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bjorling/curve.hpp"
#include "bjorling/domain.hpp"
#include "bjorling/lorentz.hpp"
#include "bjorling/quadrature.hpp"

namespace bjorling {

using SurfaceFn = std::function<LVec3(double t, double s)>;

struct SolveOptions {
  double tol = 1e-10;
  std::size_t nodes = 2048;
  int validation_samples = 201;
  /// Parameter rectangle; defaults to the centred maximal rectangle of the
  /// causal diamond (half-widths |I|/4 in both directions).
  std::optional<Rect> domain;
};

struct Tangents {
  LVec3 xt;
  LVec3 xs;
};

/// Timelike minimal surface in d'Alembert form. For timelike data, with
/// x = t + s and y = t - s,
///
///   X(t, s) = (gamma(x) + gamma(y))/2 + (H(x) - H(y))/2,
///
/// where H is the antiderivative of h = W x gamma' from the basepoint. For
/// spacelike data the roles of t and s are exchanged (x = s + t, y = s - t),
/// so the data curve runs along t = 0.
///
/// Evaluation is defined on the whole causal diamond {x, y in I}; domain()
/// is the rectangle used for sampling. Immutable and cheap to copy.
class Surface {
 public:
  Surface() = default;

  /// Assemble a surface from an axis curve (value and first derivative are
  /// used) and the antiderivative H of the transverse field h.
  static Surface from_parts(Curve axis, Antiderivative H, DataKind kind, Rect domain,
                            double orientation, std::optional<BjorlingData> source = std::nullopt);

  LVec3 operator()(double t, double s) const { return eval(t, s); }
  LVec3 eval(double t, double s) const;
  Tangents derivatives(double t, double s) const;
  /// Unit spacelike normal, oriented so that it equals W along the data
  /// curve. Throws DegenerateNormal where X_t x X_s is (nearly) null.
  LVec3 gauss_map(double t, double s) const;

  bool contains(double t, double s) const;
  DataKind kind() const;
  /// +1 or -1, the sign applied to the normalised X_t x X_s.
  double orientation() const;
  const Rect& domain() const;
  const Interval& interval() const;
  const Antiderivative& primitive() const;
  const std::optional<BjorlingData>& source() const;

  SurfaceFn as_function() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Rect default_domain(const Interval& I, DataKind kind);

/// Validates the data (throws NullDataError or ValidationError), builds H
/// and returns the surface.
Surface solve_timelike(const BjorlingData& d, const SolveOptions& opts = {});
Surface solve_spacelike(const BjorlingData& d, const SolveOptions& opts = {});
Surface solve(const BjorlingData& d, const SolveOptions& opts = {});

Tangents surface_derivatives(const Surface& S, double t, double s);
LVec3 gauss_map(const Surface& S, double t, double s);

/// Samples of X on an nt x ns grid, row-major with t outer and s inner.
struct Mesh {
  Rect rect;
  int nt = 0;
  int ns = 0;
  std::vector<LVec3> points;

  double t(int i) const;
  double s(int j) const;
  const LVec3& at(int i, int j) const { return points[static_cast<std::size_t>(i) * ns + j]; }
};

/// Rows are evaluated on up to `threads` worker threads (0 = hardware).
Mesh sample_grid(const SurfaceFn& f, const Rect& rect, int nt, int ns, unsigned threads = 0);

}  // namespace bjorling
