#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bjorling/curve.hpp"
#include "bjorling/surface.hpp"

namespace bjorling {

/// nt x ns sample points over `rect` plus the finite-difference step h.
struct Grid {
  Rect rect;
  int nt = 51;
  int ns = 51;
  double h = 1e-3;

  /// Grid over `domain` inset by 2h so every stencil stays inside it;
  /// h defaults to 1e-3 times the larger side of the domain.
  static Grid over(const Rect& domain, int nt = 51, int ns = 51,
                   std::optional<double> h = std::nullopt);

  double t(int i) const;
  double s(int j) const;
};

struct Residual {
  double value = 0.0;
  double t = 0.0;
  double s = 0.0;
};

/// max |X_tt - X_ss|_E with 3-point second differences of step h.
Residual minimality_residual(const SurfaceFn& f, const Grid& g);

struct ConformalityResidual {
  Residual sum;     // max |<X_t, X_t> + <X_s, X_s>|
  Residual cross;   // max |<X_t, X_s>|
  Residual margin;  // min (<X_s, X_s> - <X_t, X_t>)
};

/// First derivatives by 5-point central differences of step h.
ConformalityResidual conformality_residual(const SurfaceFn& f, const Grid& g);

/// max |fA - fB|_E over the grid.
Residual compare(const SurfaceFn& a, const SurfaceFn& b, const Grid& g);

/// max(1, max |X|_E) over the grid.
double surface_scale(const SurfaceFn& f, const Grid& g);

Tangents fd_tangents(const SurfaceFn& f, double t, double s, double h);
/// Unit normal of the finite-difference tangent plane (sign of X_t x X_s).
LVec3 fd_normal(const SurfaceFn& f, double t, double s, double h);

struct BoundaryResidual {
  Residual point;   // max |X - gamma| along the data curve
  Residual normal;  // max |N - W|, with N from finite differences
};

/// Samples the data curve (t = 0 axis for spacelike data, s = 0 otherwise)
/// at n points of the data interval inset by 4h, h = 1e-3 |I|.
BoundaryResidual boundary_check(const Surface& S, const BjorlingData& d, int n = 200);

struct CheckResult {
  std::string name;
  Residual residual;
  double tol = 0.0;
  bool pass = false;
  /// Pass means residual > tol instead of residual <= tol.
  bool lower_bound = false;
};

struct Tolerances {
  double minimality = 1e-5;  // relative to surface scale
  double conformality = 1e-6;
  double boundary_point = 1e-10;
  double boundary_normal = 1e-8;
  double compare = 1e-8;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  Grid grid;
  double scale = 1.0;

  bool pass() const noexcept;
  const CheckResult* find(const std::string& name) const noexcept;
  void add(std::string name, Residual r, double tol, bool lower_bound = false);
};

/// Minimality, conformality (sum, cross) and timelike margin on the grid.
VerificationReport verify_surface(const SurfaceFn& f, const Grid& g, const Tolerances& tol = {});

/// Appends boundary_point and boundary_normal checks.
void add_boundary_checks(VerificationReport& report, const Surface& S, const BjorlingData& d,
                         const Tolerances& tol = {}, int n = 200);

/// Checks on a sampled mesh using its own spacing: minimality (tol
/// rel_tol * scale), conformality (rel_tol * scale^2) and timelike margin.
VerificationReport verify_mesh(const Mesh& m, double rel_tol = 1e-3);

}  // namespace bjorling
