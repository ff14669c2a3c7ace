#include "bjorling/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace bjorling {

namespace {

CurveSpec curve(std::string x1, std::string x2, std::string x3,
                std::optional<std::array<std::string, 2>> interval = std::nullopt) {
  return {{std::move(x1), std::move(x2), std::move(x3)}, {}, std::move(interval)};
}

ClosedFormSpec closed(std::string x1, std::string x2, std::string x3,
                      Frame frame = Frame::canonical) {
  return {{std::move(x1), std::move(x2), std::move(x3)}, frame};
}

FixtureSpec explicit_fixture(std::string name, std::string description, DataKind kind,
                             CurveSpec gamma, CurveSpec w, std::string basepoint,
                             std::array<std::string, 4> domain, ParamMap params,
                             ClosedFormSpec closed_form) {
  FixtureSpec f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.problem.gamma = std::move(gamma);
  f.problem.w.curve = std::move(w);
  f.problem.kind = kind;
  f.problem.basepoint = std::move(basepoint);
  f.problem.domain = std::move(domain);
  f.problem.params = std::move(params);
  f.closed_form = std::move(closed_form);
  return f;
}

FixtureSpec builder_fixture(std::string name, std::string description, CurveSpec gamma,
                            NormalSpec w, std::string basepoint,
                            std::array<std::string, 4> domain, ParamMap params,
                            ClosedFormSpec closed_form) {
  FixtureSpec f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.problem.gamma = std::move(gamma);
  f.problem.w = std::move(w);
  f.problem.basepoint = std::move(basepoint);
  f.problem.domain = std::move(domain);
  f.problem.params = std::move(params);
  f.closed_form = std::move(closed_form);
  return f;
}

NormalSpec planar(std::string e1, std::string e2, std::string e3, Frame frame = Frame::canonical) {
  NormalSpec w;
  w.builder = NormalSpec::Builder::planar_orthogonal;
  w.plane_normal = {std::move(e1), std::move(e2), std::move(e3)};
  w.frame = frame;
  return w;
}

std::vector<FixtureSpec> build_catalogue() {
  std::vector<FixtureSpec> v;

  v.push_back(explicit_fixture(
      "helicoid1", "helicoid of the first kind; spacelike data curve", DataKind::spacelike,
      curve("0", "sin(t)/c", "0", {{"-1.4", "1.4"}}),
      curve("sin(t)/cos(t)", "0", "1/cos(t)"), "0", {"-0.5", "0.5", "-0.8", "0.8"}, {{"c", 1.0}},
      closed("t/c", "sin(s)*cos(t)/c", "sin(s)*sin(t)/c")));

  v.push_back(explicit_fixture(
      "helicoid2", "helicoid of the second kind; spacelike data curve", DataKind::spacelike,
      curve("0", "cosh(t)/c", "0", {{"0.3", "2.5"}}),
      curve("1/sinh(t)", "0", "cosh(t)/sinh(t)"), "1", {"-0.45", "0.45", "0.8", "2.0"},
      {{"c", 1.0}}, closed("cosh(s)*sinh(t)/c", "cosh(s)*cosh(t)/c", "t/c")));

  v.push_back(explicit_fixture(
      "helicoid3", "helicoid of the third kind; timelike data curve", DataKind::timelike,
      curve("sinh(t)/c", "0", "0", {{"-2", "2"}}),
      curve("0", "-1/cosh(t)", "sinh(t)/cosh(t)"), "0", {"-1", "1", "-0.8", "0.8"}, {{"c", 1.0}},
      closed("sinh(t)*cosh(s)/c", "sinh(t)*sinh(s)/c", "s/c")));

  v.push_back(builder_fixture(
      "elliptic_catenoid", "catenoid with timelike axis, meeting the plane x3 = 0 orthogonally",
      curve("A*(t+theta)", "A*cos(t)", "0", {{"-pi/2+0.1", "pi/2-0.1"}}), planar("0", "0", "1"),
      "0", {"-0.8", "0.8", "-0.6", "0.6"}, {{"A", 1.0}, {"theta", 0.0}},
      closed("A*(t+theta)", "A*cos(t)*cos(s)", "A*cos(t)*sin(s)")));

  v.push_back(builder_fixture(
      "hyperbolic_catenoid", "catenoid with spacelike axis, meeting the plane x2 = 0 orthogonally",
      curve("A*sinh(t)", "0", "A*(t-theta)", {{"0.1", "2"}}), planar("0", "1", "0"), "1",
      {"0.6", "1.5", "-0.45", "0.45"}, {{"A", 1.0}, {"theta", 0.0}},
      closed("A*sinh(t)*cosh(s)", "A*sinh(t)*sinh(s)", "A*(t-theta)")));

  v.push_back(builder_fixture(
      "spacelike_profile_revolution",
      "surface of revolution from a spacelike profile in the plane x1 = 0",
      curve("0", "A*cosh(t)", "A*(t-theta)", {{"0.1", "2"}}), planar("1", "0", "0"), "1",
      {"-0.45", "0.45", "0.6", "1.5"}, {{"A", 1.0}, {"theta", 0.0}},
      closed("A*cosh(s)*sinh(t)", "A*cosh(s)*cosh(t)", "A*(s-theta)")));

  v.push_back(builder_fixture(
      "parabolic_catenoid", "catenoid with null axis, stored in the null frame {L1, L2, L3}",
      curve("A*(t^3/6+B*t^2/2+B^2*t/2)", "-A*(t+B)", "0", {{"-B-2.2", "-B-0.1"}}),
      planar("0", "0", "-1", Frame::null), "-B-1.1", {"-B-1.5", "-B-0.7", "-0.5", "0.5"},
      {{"A", 1.0}, {"B", 0.0}},
      closed("A*(t^3/6+B*t^2/2+B^2*t/2+s^2*(t+B)/2)", "-A*(t+B)", "A*s*(t+B)", Frame::null)));

  {
    NormalSpec geo;
    geo.builder = NormalSpec::Builder::geodesic;
    v.push_back(builder_fixture(
        "pseudo_circle_surface", "surface containing a pseudo-circle as a geodesic",
        curve("R*sinh(t)", "0", "R*cosh(t)", {{"-2", "2"}}), geo, "0", {"-1", "1", "-0.8", "0.8"},
        {{"R", 1.0}}, closed("R*sinh(t)*cosh(s)", "-R*s", "R*cosh(t)*cosh(s)")));
  }

  v.push_back(explicit_fixture(
      "enneper2_conjugate", "conjugate of the Enneper surface of the second kind",
      DataKind::spacelike, curve("0", "(1-t^2)/(2*c)", "0", {{"0.1", "0.95"}}),
      curve("(1-t^2)/(2*t)", "0", "(1+t^2)/(2*t)"), "0.5", {"-0.2", "0.2", "0.35", "0.7"},
      {{"c", 1.0}},
      closed("-(3*t+3*t*s^2+t^3)/(6*c)", "-(3*s^2+3*t^2-3)/(6*c)", "-(3*t-3*t*s^2-t^3)/(6*c)")));

  v.push_back(explicit_fixture(
      "bscroll_cubic", "B-scroll over a cubic null curve", DataKind::timelike,
      curve("-t^3/(6*sqrt(2))-sqrt(2)*t", "-t^2/2", "-t^3/(6*sqrt(2))", {{"-2", "2"}}),
      curve("t/sqrt(2)", "1", "t/sqrt(2)"), "0", {"-1", "1", "-0.8", "0.8"}, {},
      closed("-(s^3+3*s^2*t+3*s*t^2+t^3+12*t)/(6*sqrt(2))", "-(s+t)^2/2",
             "-(s^3+3*s^2*t+3*s*(t^2-4)+t^3)/(6*sqrt(2))")));

  {
    FixtureSpec f = explicit_fixture(
        "null_nonuniqueness_pair",
        "two distinct minimal surfaces through the same null curve with the same normal",
        DataKind::timelike, curve("4/3*t^3+t", "4/3*t^3-t", "2*t^2", {{"-1", "1"}}),
        curve("2*t", "2*t", "1"), "0", {"-0.5", "0.5", "-0.5", "0.5"}, {},
        closed("4/3*(t+s)^3+(t+s)+sinh(2*(t-s))/2", "4/3*(t+s)^3-(t+s)+(t-s)",
               "2*(t+s)^2+(cosh(2*(t-s))-1)/2"));
    f.role = "null_pair";
    f.closed_form_alt = closed("4/3*(t+s)^3+(t+s)+(t-s)", "4/3*(t+s)^3-(t+s)+(t-s)", "2*(t+s)^2");
    v.push_back(std::move(f));
  }
  return v;
}

}  // namespace

const std::vector<FixtureSpec>& fixture_specs() {
  static const std::vector<FixtureSpec> catalogue = build_catalogue();
  return catalogue;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& f : fixture_specs()) names.push_back(f.name);
  return names;
}

const FixtureSpec& fixture_spec(std::string_view name) {
  for (const auto& f : fixture_specs()) {
    if (f.name == name) return f;
  }
  throw UnknownFixture(std::string(name));
}

Fixture instantiate_fixture(const FixtureSpec& spec, const ParamMap& overrides) {
  Fixture f;
  f.spec = spec;
  const Problem p = instantiate(spec.problem, overrides);
  f.params = p.params;
  f.data = p.data;
  f.domain = p.domain.value_or(default_domain(p.data.interval(), p.data.kind));
  f.closed_form = closed_form_function(spec.closed_form, f.params);
  if (spec.closed_form_alt) f.closed_form_alt = closed_form_function(*spec.closed_form_alt, f.params);
  return f;
}

Fixture named_surface(std::string_view name, const ParamMap& overrides) {
  return instantiate_fixture(fixture_spec(name), overrides);
}

ParamMap nontrivial_params() {
  return {{"A", 2.0}, {"B", 0.5}, {"R", 2.0}, {"c", 0.5}, {"theta", 0.5}};
}

namespace {

void add_surface_checks(VerificationReport& rep, const std::string& prefix, const SurfaceFn& fn,
                        const Grid& g, const Tolerances& tol) {
  const VerificationReport r = verify_surface(fn, g, tol);
  for (const auto& c : r.checks) {
    rep.add(prefix + c.name, c.residual, c.tol, c.lower_bound);
  }
}

VerificationReport check_null_pair(const Fixture& f, const FixtureCheckOptions& opts) {
  VerificationReport rep;
  const Grid g = Grid::over(f.domain, opts.grid, opts.grid);
  rep.grid = g;

  // The solver must refuse the data.
  Residual refused{1.0, 0.0, 0.0};
  try {
    SolveOptions so = opts.solve;
    so.domain = f.domain;
    (void)solve(f.data, so);
  } catch (const NullDataError&) {
    refused.value = 0.0;
  }
  rep.add("solver_refuses_null_data", refused, 0.0);

  const BjorlingData& d = f.data;
  const double h = g.h;
  const double lo = std::max(f.domain.t0, f.domain.s0) + 4.0 * h;
  const double hi = std::min(f.domain.t1, f.domain.s1) - 4.0 * h;
  const int n = opts.boundary_samples;

  Residual unit;
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    const LVec3 W = d.w_field.value(2.0 * t);
    const double u = std::abs(inner(W, W) - 1.0);
    if (u > unit.value) unit = {u, t, t};
  }
  rep.add("normal_unit", unit, opts.tol.boundary_normal);

  const std::pair<const char*, const SurfaceFn*> members[] = {{"f_", &f.closed_form},
                                                              {"g_", &f.closed_form_alt}};
  for (const auto& [prefix, fn] : members) {
    add_surface_checks(rep, prefix, *fn, g, opts.tol);
    Residual contain;
    Residual normal;
    for (int i = 0; i < n; ++i) {
      // Along t = s the null coordinates are (2t, 0).
      const double t = lo + (hi - lo) * i / (n - 1);
      const double dist = distance((*fn)(t, t), d.gamma.value(2.0 * t));
      if (dist > contain.value) contain = {dist, t, t};
      const LVec3 N = fd_normal(*fn, t, t, h);
      const LVec3 W = d.w_field.value(2.0 * t);
      const double e = std::min(distance(N, W), distance(N, -W));
      if (e > normal.value) normal = {e, t, t};
    }
    rep.add(std::string(prefix) + "contains_curve", contain, opts.tol.boundary_point);
    rep.add(std::string(prefix) + "normal_along_curve", normal, opts.tol.boundary_normal);
  }

  const Grid full{f.domain, opts.grid, opts.grid, g.h};
  rep.add("pair_distance", compare(f.closed_form, f.closed_form_alt, full), 0.1, true);
  return rep;
}

}  // namespace

VerificationReport check_fixture(const Fixture& f, const FixtureCheckOptions& opts) {
  if (f.spec.role == "null_pair") return check_null_pair(f, opts);

  SolveOptions so = opts.solve;
  so.domain = f.domain;
  const Surface S = solve(f.data, so);
  const SurfaceFn X = S.as_function();

  const Grid g = Grid::over(f.domain, opts.grid, opts.grid);
  VerificationReport rep = verify_surface(X, g, opts.tol);
  add_boundary_checks(rep, S, f.data, opts.tol, opts.boundary_samples);
  add_surface_checks(rep, "closed_form_", f.closed_form, g, opts.tol);

  const Grid full{f.domain, opts.grid, opts.grid, g.h};
  rep.add("closed_form_distance", compare(X, f.closed_form, full), opts.tol.compare);
  return rep;
}

}  // namespace bjorling
