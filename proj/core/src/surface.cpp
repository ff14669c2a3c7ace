#include "bjorling/surface.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace bjorling {

struct Surface::Impl {
  Curve axis;
  Antiderivative H;
  DataKind kind = DataKind::timelike;
  Rect domain;
  double sigma = 1.0;
  std::optional<BjorlingData> source;

  struct Null {
    double x;
    double y;
  };

  Null null_coords(double t, double s) const {
    const double along = kind == DataKind::timelike ? t : s;
    const double across = kind == DataKind::timelike ? s : t;
    const Null n{along + across, along - across};
    const Interval& I = H.interval();
    if (!I.contains(n.x) || !I.contains(n.y)) {
      throw DomainError("(" + std::to_string(t) + ", " + std::to_string(s) +
                        ") lies outside the causal diamond of the data interval [" +
                        std::to_string(I.lo) + ", " + std::to_string(I.hi) + "]");
    }
    return n;
  }

  Tangents tangents(double t, double s) const {
    const Null n = null_coords(t, s);
    const LVec3 gx = axis.d1(n.x);
    const LVec3 gy = axis.d1(n.y);
    const LVec3 hx = H.integrand(n.x);
    const LVec3 hy = H.integrand(n.y);
    const LVec3 along = 0.5 * (gx + gy) + 0.5 * (hx - hy);
    const LVec3 across = 0.5 * (gx - gy) + 0.5 * (hx + hy);
    if (kind == DataKind::timelike) return {along, across};
    return {across, along};
  }

  LVec3 unit_normal(const Tangents& d) const {
    const LVec3 c = cross(d.xt, d.xs);
    const double q = inner(c, c);
    const double eps = 1e-12 * std::max(1.0, euclidean_norm_sq(d.xt) * euclidean_norm_sq(d.xs));
    if (q <= eps) {
      throw DegenerateNormal("X_t x X_s is not spacelike (<c, c> = " + std::to_string(q) +
                             "); the surface is degenerate or not timelike here");
    }
    return c / std::sqrt(q);
  }
};

Surface Surface::from_parts(Curve axis, Antiderivative H, DataKind kind, Rect domain,
                            double orientation, std::optional<BjorlingData> source) {
  auto impl = std::make_shared<Impl>();
  impl->axis = std::move(axis);
  impl->H = std::move(H);
  impl->kind = kind;
  impl->domain = domain;
  impl->sigma = orientation < 0.0 ? -1.0 : 1.0;
  impl->source = std::move(source);
  Surface S;
  S.impl_ = std::move(impl);
  return S;
}

LVec3 Surface::eval(double t, double s) const {
  const auto n = impl_->null_coords(t, s);
  const LVec3 gx = impl_->axis.value(n.x);
  const LVec3 gy = impl_->axis.value(n.y);
  return 0.5 * (gx + gy) + 0.5 * (impl_->H(n.x) - impl_->H(n.y));
}

Tangents Surface::derivatives(double t, double s) const { return impl_->tangents(t, s); }

LVec3 Surface::gauss_map(double t, double s) const {
  return impl_->sigma * impl_->unit_normal(impl_->tangents(t, s));
}

bool Surface::contains(double t, double s) const {
  const double along = impl_->kind == DataKind::timelike ? t : s;
  const double across = impl_->kind == DataKind::timelike ? s : t;
  const Interval& I = impl_->H.interval();
  return I.contains(along + across) && I.contains(along - across);
}

DataKind Surface::kind() const { return impl_->kind; }
double Surface::orientation() const { return impl_->sigma; }
const Rect& Surface::domain() const { return impl_->domain; }
const Interval& Surface::interval() const { return impl_->H.interval(); }
const Antiderivative& Surface::primitive() const { return impl_->H; }
const std::optional<BjorlingData>& Surface::source() const { return impl_->source; }

SurfaceFn Surface::as_function() const {
  return [impl = impl_](double t, double s) {
    const auto n = impl->null_coords(t, s);
    return 0.5 * (impl->axis.value(n.x) + impl->axis.value(n.y)) +
           0.5 * (impl->H(n.x) - impl->H(n.y));
  };
}

Rect default_domain(const Interval& I, DataKind kind) {
  const double q = 0.25 * I.width();
  const double m = I.mid();
  if (kind == DataKind::timelike) return {m - q, m + q, -q, q};
  return {-q, q, m - q, m + q};
}

namespace {

Surface solve_impl(const BjorlingData& d, const SolveOptions& opts) {
  ValidationReport report = validate_data(d, opts.validation_samples, opts.domain);
  if (report.null_curve) throw NullDataError(std::move(report));
  if (!report.pass()) throw ValidationError(std::move(report));

  const Interval I = d.interval();
  if (!I.contains(d.basepoint)) throw ValidationError("basepoint outside the data interval", report);

  const Curve gamma = d.gamma;
  const Curve w = d.w_field;
  VectorFn h = [gamma, w](double t) { return cross(w.value(t), gamma.d1(t)); };
  QuadratureOptions qopts;
  qopts.nodes = opts.nodes;
  Antiderivative H = cumulative_integral(std::move(h), d.basepoint, I, opts.tol, qopts);

  const Rect rect = opts.domain.value_or(default_domain(I, d.kind));
  Surface S = Surface::from_parts(gamma.restricted(I), std::move(H), d.kind, rect, 1.0, d);

  // Fix the sign once so that N = W at the basepoint of the data curve.
  const double t = d.kind == DataKind::timelike ? d.basepoint : 0.0;
  const double s = d.kind == DataKind::timelike ? 0.0 : d.basepoint;
  const double sigma = inner(S.gauss_map(t, s), w.value(d.basepoint)) < 0.0 ? -1.0 : 1.0;
  if (sigma > 0.0) return S;
  return Surface::from_parts(gamma.restricted(I), S.primitive(), d.kind, rect, sigma, d);
}

}  // namespace

Surface solve_timelike(const BjorlingData& d, const SolveOptions& opts) {
  if (d.kind != DataKind::timelike) throw DomainError("solve_timelike needs timelike data");
  return solve_impl(d, opts);
}

Surface solve_spacelike(const BjorlingData& d, const SolveOptions& opts) {
  if (d.kind != DataKind::spacelike) throw DomainError("solve_spacelike needs spacelike data");
  return solve_impl(d, opts);
}

Surface solve(const BjorlingData& d, const SolveOptions& opts) { return solve_impl(d, opts); }

Tangents surface_derivatives(const Surface& S, double t, double s) { return S.derivatives(t, s); }

LVec3 gauss_map(const Surface& S, double t, double s) { return S.gauss_map(t, s); }

double Mesh::t(int i) const {
  return nt == 1 ? rect.t0 : (i + 1 == nt ? rect.t1 : rect.t0 + rect.t_width() * i / (nt - 1));
}

double Mesh::s(int j) const {
  return ns == 1 ? rect.s0 : (j + 1 == ns ? rect.s1 : rect.s0 + rect.s_width() * j / (ns - 1));
}

Mesh sample_grid(const SurfaceFn& f, const Rect& rect, int nt, int ns, unsigned threads) {
  if (nt < 2 || ns < 2) throw DomainError("grid resolution must be at least 2x2");
  Mesh m;
  m.rect = rect;
  m.nt = nt;
  m.ns = ns;
  m.points.resize(static_cast<std::size_t>(nt) * ns);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(nt));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned worker) {
    try {
      for (int i = static_cast<int>(worker); i < nt; i += static_cast<int>(threads)) {
        const double t = m.t(i);
        for (int j = 0; j < ns; ++j) {
          m.points[static_cast<std::size_t>(i) * ns + j] = f(t, m.s(j));
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

}  // namespace bjorling
