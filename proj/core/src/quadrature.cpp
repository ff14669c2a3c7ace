#include "bjorling/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bjorling/error.hpp"

namespace bjorling {

namespace {

double max_abs(const LVec3& v) {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

struct SimpsonResult {
  LVec3 value;
  double error = 0.0;
};

class Simpson {
 public:
  Simpson(const VectorFn& f, int max_depth) : f_(f), max_depth_(max_depth) {}

  SimpsonResult integrate(double a, double b, double tol) {
    const LVec3 fa = f_(a);
    const LVec3 fb = f_(b);
    const double m = 0.5 * (a + b);
    const LVec3 fm = f_(m);
    const LVec3 whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    SimpsonResult r;
    r.value = recurse(a, b, fa, fm, fb, whole, tol, 0, r.error);
    return r;
  }

 private:
  LVec3 recurse(double a, double b, const LVec3& fa, const LVec3& fm, const LVec3& fb,
                const LVec3& whole, double tol, int depth, double& err_sum) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const LVec3 flm = f_(lm);
    const LVec3 frm = f_(rm);
    const LVec3 left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const LVec3 right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const LVec3 diff = left + right - whole;
    const double err = max_abs(diff) / 15.0;

    // Below this the difference is rounding noise and cannot shrink further.
    const double scale = (b - a) * std::max({max_abs(fa), max_abs(fm), max_abs(fb),
                                             max_abs(flm), max_abs(frm)});
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;

    if (!std::isfinite(err)) throw QuadratureFailure("non-finite integrand value");
    if (err <= tol || err <= floor) {
      err_sum += err;
      return left + right + diff / 15.0;
    }
    if (depth >= max_depth_) {
      throw QuadratureFailure("adaptive Simpson exceeded depth " + std::to_string(max_depth_) +
                              " on [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] without meeting tolerance");
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, err_sum) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, err_sum);
  }

  const VectorFn& f_;
  int max_depth_;
};

LVec3 hermite(double u, double w, const LVec3& v0, const LVec3& m0, const LVec3& v1,
              const LVec3& m1) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * v0 + (h10 * w) * m0 + h01 * v1 + (h11 * w) * m1;
}

}  // namespace

LVec3 adaptive_simpson(const VectorFn& f, double a, double b, double tol, int max_depth) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (a == b) return {};
  return Simpson(f, max_depth).integrate(a, b, tol).value;
}

double Antiderivative::node(std::size_t k) const noexcept {
  return k + 1 == values_.size() ? interval_.hi : interval_.lo + width_ * static_cast<double>(k);
}

LVec3 Antiderivative::cumulative(double t) const {
  const std::size_t n = values_.size() - 1;
  const double pos = (t - interval_.lo) / width_;
  std::size_t k = pos <= 0.0 ? 0 : static_cast<std::size_t>(pos);
  if (k >= n) k = n - 1;
  const double a = node(k);
  const double w = node(k + 1) - a;
  return hermite((t - a) / w, w, values_[k], slopes_[k], values_[k + 1], slopes_[k + 1]);
}

LVec3 Antiderivative::operator()(double t) const {
  if (values_.empty()) throw DomainError("evaluating an empty antiderivative");
  if (!interval_.contains(t)) {
    throw DomainError("antiderivative evaluated at " + std::to_string(t) + " outside [" +
                      std::to_string(interval_.lo) + ", " + std::to_string(interval_.hi) + "]");
  }
  return cumulative(t) - c_t0_;
}

Antiderivative cumulative_integral(VectorFn h, double t0, Interval interval, double tol,
                                   const QuadratureOptions& opts) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (!(interval.lo < interval.hi)) throw DomainError("quadrature interval must have lo < hi");
  if (!interval.contains(t0)) throw DomainError("basepoint outside the quadrature interval");
  if (opts.nodes < 1) throw DomainError("quadrature needs at least one panel");

  Antiderivative A;
  A.h_ = std::move(h);
  A.interval_ = interval;
  A.t0_ = t0;
  A.tol_ = tol;

  const double L = interval.width();
  Simpson simpson(A.h_, opts.max_depth);

  for (std::size_t n = opts.nodes;; n *= 2) {
    if (n > opts.max_nodes) {
      throw QuadratureFailure("antiderivative table did not reach tolerance " +
                              std::to_string(tol) + " with " + std::to_string(opts.max_nodes) +
                              " panels");
    }
    A.width_ = L / static_cast<double>(n);
    A.values_.assign(n + 1, LVec3{});
    A.slopes_.assign(n + 1, LVec3{});
    A.error_ = 0.0;

    const double panel_tol = tol * A.width_ / L;
    for (std::size_t k = 0; k <= n; ++k) A.slopes_[k] = A.h_(A.node(k));
    for (std::size_t k = 0; k < n; ++k) {
      const SimpsonResult r = simpson.integrate(A.node(k), A.node(k + 1), panel_tol);
      A.values_[k + 1] = A.values_[k] + r.value;
      A.error_ += r.error;
    }

    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double a = A.node(k);
      const double b = A.node(k + 1);
      const double m = 0.5 * (a + b);
      const LVec3 direct = A.values_[k] + simpson.integrate(a, m, 0.5 * panel_tol).value;
      const LVec3 interp = hermite(0.5, b - a, A.values_[k], A.slopes_[k], A.values_[k + 1],
                                   A.slopes_[k + 1]);
      worst = std::max(worst, max_abs(direct - interp));
    }
    if (worst <= tol) {
      A.error_ += worst;
      break;
    }
  }
  A.c_t0_ = A.cumulative(t0);
  return A;
}

}  // namespace bjorling
