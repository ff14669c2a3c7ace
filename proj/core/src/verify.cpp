#include "bjorling/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bjorling {

Grid Grid::over(const Rect& domain, int nt, int ns, std::optional<double> h) {
  if (nt < 2 || ns < 2) throw DomainError("grid resolution must be at least 2x2");
  Grid g;
  g.nt = nt;
  g.ns = ns;
  g.h = h.value_or(1e-3 * std::max(domain.t_width(), domain.s_width()));
  const double inset = 2.0 * g.h;
  g.rect = {domain.t0 + inset, domain.t1 - inset, domain.s0 + inset, domain.s1 - inset};
  if (!(g.rect.t0 < g.rect.t1 && g.rect.s0 < g.rect.s1)) {
    throw DomainError("domain too small for the finite-difference step");
  }
  return g;
}

double Grid::t(int i) const {
  return i + 1 == nt ? rect.t1 : rect.t0 + rect.t_width() * i / (nt - 1);
}

double Grid::s(int j) const {
  return j + 1 == ns ? rect.s1 : rect.s0 + rect.s_width() * j / (ns - 1);
}

namespace {

template <class Fn>
void sweep(const Grid& g, Fn&& fn) {
  for (int i = 0; i < g.nt; ++i) {
    const double t = g.t(i);
    for (int j = 0; j < g.ns; ++j) fn(t, g.s(j));
  }
}

void keep_max(Residual& r, double v, double t, double s) {
  if (v > r.value || std::isnan(v)) r = {v, t, s};
}

}  // namespace

Residual minimality_residual(const SurfaceFn& f, const Grid& g) {
  Residual r;
  const double h2 = g.h * g.h;
  sweep(g, [&](double t, double s) {
    const LVec3 c = f(t, s);
    const LVec3 xtt = (f(t + g.h, s) - 2.0 * c + f(t - g.h, s)) / h2;
    const LVec3 xss = (f(t, s + g.h) - 2.0 * c + f(t, s - g.h)) / h2;
    keep_max(r, euclidean_norm(xtt - xss), t, s);
  });
  return r;
}

Tangents fd_tangents(const SurfaceFn& f, double t, double s, double h) {
  const double k = 1.0 / (12.0 * h);
  const LVec3 xt = k * (-f(t + 2 * h, s) + 8.0 * f(t + h, s) - 8.0 * f(t - h, s) + f(t - 2 * h, s));
  const LVec3 xs = k * (-f(t, s + 2 * h) + 8.0 * f(t, s + h) - 8.0 * f(t, s - h) + f(t, s - 2 * h));
  return {xt, xs};
}

LVec3 fd_normal(const SurfaceFn& f, double t, double s, double h) {
  const Tangents d = fd_tangents(f, t, s, h);
  const LVec3 c = cross(d.xt, d.xs);
  const double q = inner(c, c);
  if (!(q > 0.0)) throw DegenerateNormal("finite-difference tangent plane is not timelike");
  return c / std::sqrt(q);
}

ConformalityResidual conformality_residual(const SurfaceFn& f, const Grid& g) {
  ConformalityResidual r;
  r.margin.value = std::numeric_limits<double>::infinity();
  sweep(g, [&](double t, double s) {
    const Tangents d = fd_tangents(f, t, s, g.h);
    const double tt = inner(d.xt, d.xt);
    const double ss = inner(d.xs, d.xs);
    keep_max(r.sum, std::abs(tt + ss), t, s);
    keep_max(r.cross, std::abs(inner(d.xt, d.xs)), t, s);
    const double m = ss - tt;
    if (m < r.margin.value || std::isnan(m)) r.margin = {m, t, s};
  });
  return r;
}

Residual compare(const SurfaceFn& a, const SurfaceFn& b, const Grid& g) {
  Residual r;
  sweep(g, [&](double t, double s) { keep_max(r, distance(a(t, s), b(t, s)), t, s); });
  return r;
}

double surface_scale(const SurfaceFn& f, const Grid& g) {
  double m = 1.0;
  sweep(g, [&](double t, double s) { m = std::max(m, euclidean_norm(f(t, s))); });
  return m;
}

BoundaryResidual boundary_check(const Surface& S, const BjorlingData& d, int n) {
  if (n < 2) n = 2;
  const Interval I = intersect(d.interval(), S.interval());
  const double h = 1e-3 * I.width();
  const double lo = I.lo + 4.0 * h;
  const double hi = I.hi - 4.0 * h;
  const SurfaceFn f = S.as_function();
  const bool timelike = S.kind() == DataKind::timelike;

  BoundaryResidual r;
  for (int i = 0; i < n; ++i) {
    const double u = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
    const double t = timelike ? u : 0.0;
    const double s = timelike ? 0.0 : u;
    keep_max(r.point, distance(f(t, s), d.gamma.value(u)), t, s);
    const LVec3 N = S.orientation() * fd_normal(f, t, s, h);
    keep_max(r.normal, distance(N, d.w_field.value(u)), t, s);
  }
  return r;
}

bool VerificationReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::add(std::string name, Residual r, double tol, bool lower_bound) {
  const bool ok = lower_bound ? r.value > tol : r.value <= tol;
  checks.push_back({std::move(name), r, tol, ok, lower_bound});
}

VerificationReport verify_surface(const SurfaceFn& f, const Grid& g, const Tolerances& tol) {
  VerificationReport rep;
  rep.grid = g;
  rep.scale = surface_scale(f, g);
  rep.add("minimality", minimality_residual(f, g), tol.minimality * rep.scale);
  const ConformalityResidual c = conformality_residual(f, g);
  rep.add("conformality_sum", c.sum, tol.conformality);
  rep.add("conformality_cross", c.cross, tol.conformality);
  rep.add("timelike_margin", c.margin, 0.0, true);
  return rep;
}

void add_boundary_checks(VerificationReport& report, const Surface& S, const BjorlingData& d,
                         const Tolerances& tol, int n) {
  const BoundaryResidual b = boundary_check(S, d, n);
  report.add("boundary_point", b.point, tol.boundary_point);
  report.add("boundary_normal", b.normal, tol.boundary_normal);
}

VerificationReport verify_mesh(const Mesh& m, double rel_tol) {
  if (m.nt < 3 || m.ns < 3) throw DomainError("mesh verification needs at least 3x3 points");
  const double dt = m.rect.t_width() / (m.nt - 1);
  const double ds = m.rect.s_width() / (m.ns - 1);

  VerificationReport rep;
  rep.grid = {m.rect, m.nt, m.ns, std::min(dt, ds)};
  for (const LVec3& p : m.points) rep.scale = std::max(rep.scale, euclidean_norm(p));

  Residual minimal;
  Residual sum;
  Residual crs;
  Residual margin{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int i = 1; i + 1 < m.nt; ++i) {
    for (int j = 1; j + 1 < m.ns; ++j) {
      const double t = m.t(i);
      const double s = m.s(j);
      const LVec3& c = m.at(i, j);
      const LVec3 xtt = (m.at(i + 1, j) - 2.0 * c + m.at(i - 1, j)) / (dt * dt);
      const LVec3 xss = (m.at(i, j + 1) - 2.0 * c + m.at(i, j - 1)) / (ds * ds);
      keep_max(minimal, euclidean_norm(xtt - xss), t, s);
      const LVec3 xt = (m.at(i + 1, j) - m.at(i - 1, j)) / (2.0 * dt);
      const LVec3 xs = (m.at(i, j + 1) - m.at(i, j - 1)) / (2.0 * ds);
      const double tt = inner(xt, xt);
      const double ss = inner(xs, xs);
      keep_max(sum, std::abs(tt + ss), t, s);
      keep_max(crs, std::abs(inner(xt, xs)), t, s);
      if (ss - tt < margin.value || std::isnan(ss - tt)) margin = {ss - tt, t, s};
    }
  }
  rep.add("minimality", minimal, rel_tol * rep.scale);
  rep.add("conformality_sum", sum, rel_tol * rep.scale * rep.scale);
  rep.add("conformality_cross", crs, rel_tol * rep.scale * rep.scale);
  rep.add("timelike_margin", margin, 0.0, true);
  return rep;
}

}  // namespace bjorling
