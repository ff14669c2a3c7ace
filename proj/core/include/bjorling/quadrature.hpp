#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bjorling/domain.hpp"
#include "bjorling/lorentz.hpp"

namespace bjorling {

using VectorFn = std::function<LVec3(double)>;

struct QuadratureOptions {
  std::size_t nodes = 2048;       // initial table panels
  int max_depth = 30;             // adaptive Simpson recursion cap
  std::size_t max_nodes = 1 << 20;  // refinement gives up beyond this
};

/// Componentwise adaptive Simpson with Richardson correction. The error
/// estimate |S2 - S1|/15 must meet `tol` (in the max norm) on every leaf;
/// throws QuadratureFailure when a branch exceeds `max_depth`.
LVec3 adaptive_simpson(const VectorFn& f, double a, double b, double tol, int max_depth = 30);

/// Tabulated H(t) = int_{t0}^t h over an interval. The table stores the
/// integral from interval.lo and h at uniform nodes; H between nodes is the
/// cubic Hermite interpolant, which is C^1.
class Antiderivative {
 public:
  Antiderivative() = default;

  /// Throws DomainError outside interval().
  LVec3 operator()(double t) const;
  /// The integrand itself, h(t).
  LVec3 integrand(double t) const { return h_(t); }

  double t0() const noexcept { return t0_; }
  double tol() const noexcept { return tol_; }
  /// Sum of per-panel Simpson error estimates plus the worst interpolation
  /// check at panel midpoints.
  double error_estimate() const noexcept { return error_; }
  const Interval& interval() const noexcept { return interval_; }
  std::size_t panels() const noexcept { return values_.size() - 1; }
  double node(std::size_t k) const noexcept;
  /// H at node k (table value, no interpolation).
  LVec3 node_value(std::size_t k) const noexcept { return values_[k] - c_t0_; }

  friend Antiderivative cumulative_integral(VectorFn h, double t0, Interval interval, double tol,
                                            const QuadratureOptions& opts);

 private:
  LVec3 cumulative(double t) const;

  VectorFn h_;
  Interval interval_;
  double t0_ = 0.0;
  double tol_ = 0.0;
  double error_ = 0.0;
  double width_ = 0.0;  // node spacing
  std::vector<LVec3> values_;  // int_{lo}^{node k} h
  std::vector<LVec3> slopes_;  // h(node k)
  LVec3 c_t0_;
};

/// Builds the table with panel tolerance tol * (panel width)/(interval
/// width), doubling the node count until cubic Hermite interpolation agrees
/// with direct quadrature at every panel midpoint to within tol.
Antiderivative cumulative_integral(VectorFn h, double t0, Interval interval, double tol = 1e-10,
                                   const QuadratureOptions& opts = {});

}  // namespace bjorling
