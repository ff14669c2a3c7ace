#include "bjorling/builders.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bjorling {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double sample(const Interval& I, int i, int n) {
  return i + 1 == n ? I.hi : I.lo + I.width() * i / (n - 1);
}

}  // namespace

Curve null_frame_curve(const Curve& c) {
  return Curve::from_functions(
      [c](double t) {
        const Jet3 j = c.jet(t);
        return Jet3{null_frame_to_canonical(j.value), null_frame_to_canonical(j.d1),
                    null_frame_to_canonical(j.d2)};
      },
      c.interval(), c.order());
}

BjorlingData geodesic_data(const Curve& gamma, std::optional<double> basepoint, int samples) {
  const Interval I = gamma.interval();
  if (samples < 2) samples = 2;
  const double t0 = basepoint.value_or(I.mid());
  const double speed0 = inner(gamma.d1(t0), gamma.d1(t0));

  for (int i = 0; i < samples; ++i) {
    const double t = sample(I, i, samples);
    const Jet3 j = gamma.jet(t);
    if (causal_character(j.d1) != CausalCharacter::timelike) {
      throw GeodesicDataError("gamma' is not timelike at t=" + std::to_string(t));
    }
    const double q = inner(j.d1, j.d1);
    if (std::abs(q - speed0) > 1e-9 * std::max(1.0, std::abs(speed0))) {
      throw GeodesicDataError("gamma does not have constant speed (<gamma', gamma'> varies from " +
                              std::to_string(speed0) + " to " + std::to_string(q) + ")");
    }
    if (causal_character(j.d2) != CausalCharacter::spacelike) {
      throw GeodesicDataError("gamma'' is " + std::string(to_string(causal_character(j.d2))) +
                              " at t=" + std::to_string(t) + "; it must be spacelike and nonzero");
    }
  }

  Curve w = Curve::from_functions(
      [gamma](double t) {
        const LVec3 a = gamma.d2(t);
        const double q = inner(a, a);
        if (q <= causal_tolerance(a)) {
          throw GeodesicDataError("gamma'' is not spacelike at t=" + std::to_string(t));
        }
        return Jet3{-a / std::sqrt(q), {nan, nan, nan}, {nan, nan, nan}};
      },
      I, 0);
  return {gamma, w, DataKind::timelike, t0};
}

BjorlingData planar_orthogonal_data(const Curve& gamma_in, const LVec3& normal_in, Frame frame,
                                    std::optional<double> basepoint, int samples) {
  const Curve gamma = frame == Frame::null ? null_frame_curve(gamma_in) : gamma_in;
  const LVec3 e = frame == Frame::null ? null_frame_to_canonical(normal_in) : normal_in;
  const Interval I = gamma.interval();
  if (samples < 2) samples = 2;
  const double t0 = basepoint.value_or(I.mid());
  if (euclidean_norm(e) == 0.0) throw PlaneMismatch("plane normal is zero");

  const LVec3 g0 = gamma.value(t0);
  const CausalCharacter cc = causal_character(gamma.d1(t0));
  if (cc == CausalCharacter::null) {
    ValidationReport report;
    report.null_curve = true;
    throw NullDataError(report);
  }
  const DataKind kind = cc == CausalCharacter::timelike ? DataKind::timelike : DataKind::spacelike;

  for (int i = 0; i < samples; ++i) {
    const double t = sample(I, i, samples);
    const Jet3 j = gamma.jet(t);
    const LVec3 off = j.value - g0;
    const double a = std::abs(inner(off, e)) / std::max(1.0, euclidean_norm(off) * euclidean_norm(e));
    const double b = std::abs(inner(j.d1, e)) / std::max(1.0, euclidean_norm(j.d1) * euclidean_norm(e));
    if (a > 1e-9 || b > 1e-9) {
      throw PlaneMismatch("gamma leaves the plane orthogonal to the given normal at t=" +
                          std::to_string(t));
    }
  }

  auto normal = [gamma, e, kind](double t) {
    const LVec3 g1 = gamma.d1(t);
    const LVec3 c = kind == DataKind::timelike ? cross(g1, e) : cross(e, g1);
    const double q = inner(c, c);
    if (q <= causal_tolerance(c)) {
      throw DegenerateNormal("cross product of gamma' and the plane normal is not spacelike at t=" +
                             std::to_string(t));
    }
    return c / std::sqrt(q);
  };
  for (int i = 0; i < samples; ++i) normal(sample(I, i, samples));

  Curve w = Curve::from_functions(
      [normal](double t) { return Jet3{normal(t), {nan, nan, nan}, {nan, nan, nan}}; }, I, 0);
  return {gamma, w, kind, t0};
}

}  // namespace bjorling
