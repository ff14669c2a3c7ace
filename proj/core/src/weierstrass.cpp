#include "bjorling/weierstrass.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bjorling {

Surface weierstrass_surface(const Curve& F, const Curve& G, double basepoint,
                            const WeierstrassOptions& opts) {
  const Interval I = intersect(F.interval(), G.interval());
  if (!(I.lo < I.hi)) throw DomainError("F and G have no common interval");
  if (!I.contains(basepoint)) throw DomainError("basepoint outside the interval of F and G");

  const int n = std::max(2, opts.samples);
  double worst = 0.0;
  double worst_t = I.lo;
  for (int i = 0; i < n; ++i) {
    const double t = i + 1 == n ? I.hi : I.lo + I.width() * i / (n - 1);
    for (const Curve* c : {&F, &G}) {
      const LVec3 v = c->value(t);
      const double r = std::abs(inner(v, v)) / std::max(1.0, euclidean_norm_sq(v));
      if (r > worst) {
        worst = r;
        worst_t = t;
      }
    }
  }
  if (worst > opts.isotropy_tol) {
    throw IsotropyViolation("phi is not isotropic: |<F, F>| or |<G, G>| reaches " +
                                std::to_string(worst) + " at t=" + std::to_string(worst_t),
                            worst, worst_t, 0.0);
  }

  const Rect rect = opts.domain.value_or(default_domain(I, DataKind::timelike));
  const int m = std::max(2, opts.grid);
  double worst_fg = -std::numeric_limits<double>::infinity();
  double wt = rect.t0;
  double ws = rect.s0;
  for (int i = 0; i < m; ++i) {
    const double t = rect.t0 + rect.t_width() * i / (m - 1);
    for (int j = 0; j < m; ++j) {
      const double s = rect.s0 + rect.s_width() * j / (m - 1);
      const double fg = inner(F.value(t + s), G.value(t - s));
      if (fg > worst_fg) {
        worst_fg = fg;
        wt = t;
        ws = s;
      }
    }
  }
  if (!(worst_fg < 0.0)) {
    throw ConformalityViolation(
        "the induced metric is not timelike: <F(x), G(y)> = " + std::to_string(worst_fg) +
            " >= 0 at (t, s) = (" + std::to_string(wt) + ", " + std::to_string(ws) + ")",
        worst_fg, wt, ws);
  }

  QuadratureOptions q;
  q.nodes = opts.nodes;
  VectorFn sum = [F, G](double t) { return 2.0 * (F.value(t) + G.value(t)); };
  VectorFn diff = [F, G](double t) { return 2.0 * (F.value(t) - G.value(t)); };
  Antiderivative A = cumulative_integral(sum, basepoint, I, opts.tol, q);
  Antiderivative H = cumulative_integral(diff, basepoint, I, opts.tol, q);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  Curve axis = Curve::from_functions(
      [A, sum, nan](double t) { return Jet3{A(t), sum(t), {nan, nan, nan}}; }, I, 1);
  return Surface::from_parts(std::move(axis), std::move(H), DataKind::timelike, rect, 1.0);
}

}  // namespace bjorling
