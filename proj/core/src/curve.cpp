#include "bjorling/curve.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace bjorling {

namespace {

class FunctionSource final : public Curve::Source {
 public:
  FunctionSource(std::function<Jet3(double)> fn, int order) : fn_(std::move(fn)), order_(order) {}
  Jet3 jet(double t) const override { return fn_(t); }
  int order() const override { return order_; }

 private:
  std::function<Jet3(double)> fn_;
  int order_;
};

class ExprSource final : public Curve::Source {
 public:
  explicit ExprSource(CurveExpr c) : c_(std::move(c)) {}
  Jet3 jet(double t) const override { return c_.eval_d2(t); }

 private:
  CurveExpr c_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Curve Curve::from_functions(std::function<Jet3(double)> jet, Interval interval, int order) {
  return Curve(std::make_shared<FunctionSource>(std::move(jet), order), interval);
}

Jet3 Curve::jet(double t) const {
  if (!source_) throw DomainError("evaluating an empty curve");
  if (!interval_.contains(t)) {
    throw DomainError("curve parameter " + fmt(t) + " outside [" + fmt(interval_.lo) + ", " +
                      fmt(interval_.hi) + "]");
  }
  return source_->jet(t);
}

CurveExpr::CurveExpr(std::array<Expr, 3> components, Interval interval, ParamMap params)
    : components_(std::move(components)), interval_(interval), params_(std::move(params)) {
  if (!(interval_.lo < interval_.hi)) throw DomainError("curve interval must have lo < hi");
  for (std::size_t i = 0; i < 3; ++i) bound_[i] = components_[i].bind(params_);
}

CurveExpr CurveExpr::parse(const std::array<std::string, 3>& components, Interval interval,
                           const ParamMap& params) {
  std::array<Expr, 3> exprs;
  for (std::size_t i = 0; i < 3; ++i) exprs[i] = bjorling::parse(components[i], params);
  return CurveExpr(std::move(exprs), interval, params);
}

Jet3 CurveExpr::eval_d2(double t) const {
  const Jet2 a = bjorling::eval_d2(bound_[0], t);
  const Jet2 b = bjorling::eval_d2(bound_[1], t);
  const Jet2 c = bjorling::eval_d2(bound_[2], t);
  return {{a.value, b.value, c.value}, {a.d1, b.d1, c.d1}, {a.d2, b.d2, c.d2}};
}

Curve CurveExpr::curve() const { return Curve(std::make_shared<ExprSource>(*this), interval_); }

std::string_view to_string(DataKind k) noexcept {
  return k == DataKind::timelike ? "timelike" : "spacelike";
}

bool ValidationReport::pass() const noexcept {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !null_curve;
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!out.empty()) out += "; ";
    out += c.name + " violated (worst " + fmt(c.worst) + " at t=" + fmt(c.at) + ", tol " +
           fmt(c.tol) + ")";
    if (!c.detail.empty()) out += ": " + c.detail;
  }
  return out.empty() ? "all checks pass" : out;
}

ValidationReport validate_data(const BjorlingData& d, int n_samples, std::optional<Rect> domain) {
  if (n_samples < 2) throw DomainError("validate_data needs at least 2 samples");
  ValidationReport report;
  const Interval I = d.interval();

  ValidationCheck ortho{"orthogonality", 0.0, I.lo, 1e-9, true, "<gamma', W> = 0"};
  ValidationCheck unit{"unit_normal", 0.0, I.lo, 1e-9, true, "<W, W> = 1"};
  ValidationCheck causal{"causal_character", 0.0, I.lo, 0.0, true, ""};
  ValidationCheck evaluable{"evaluable", 0.0, I.lo, 0.0, true, ""};

  const auto expected =
      d.kind == DataKind::timelike ? CausalCharacter::timelike : CausalCharacter::spacelike;
  int mismatches = 0;

  for (int i = 0; i < n_samples; ++i) {
    const double t = i + 1 == n_samples ? I.hi : I.lo + I.width() * i / (n_samples - 1);
    LVec3 g1;
    LVec3 w;
    try {
      g1 = d.gamma.jet(t).d1;
      w = d.w_field.value(t);
    } catch (const Error& e) {
      if (evaluable.pass) {
        evaluable.pass = false;
        evaluable.at = t;
        evaluable.worst = 1.0;
        evaluable.detail = e.what();
      }
      continue;
    }
    if (!std::isfinite(euclidean_norm_sq(g1)) || !std::isfinite(euclidean_norm_sq(w))) {
      if (evaluable.pass) {
        evaluable.pass = false;
        evaluable.at = t;
        evaluable.worst = 1.0;
        evaluable.detail = "non-finite value";
      }
      continue;
    }

    const double o = std::abs(inner(g1, w)) / std::max(1.0, euclidean_norm(g1) * euclidean_norm(w));
    if (o > ortho.worst) {
      ortho.worst = o;
      ortho.at = t;
    }
    const double u = std::abs(inner(w, w) - 1.0);
    if (u > unit.worst) {
      unit.worst = u;
      unit.at = t;
    }

    const CausalCharacter cc = causal_character(g1);
    if (cc == CausalCharacter::null) report.null_curve = true;
    if (cc != expected) {
      // Violation measured as how far <g', g'> sits on the wrong side.
      const double q = inner(g1, g1);
      const double v = (expected == CausalCharacter::timelike ? q : -q) + causal_tolerance(g1);
      if (mismatches == 0 || v > causal.worst) {
        causal.worst = v;
        causal.at = t;
        causal.detail = "gamma' is " + std::string(to_string(cc)) + ", expected " +
                        std::string(to_string(expected));
      }
      ++mismatches;
    }
  }
  ortho.pass = ortho.worst <= ortho.tol;
  unit.pass = unit.worst <= unit.tol;
  causal.pass = mismatches == 0;

  report.checks = {ortho, unit, causal, evaluable};

  if (domain) {
    // Null coordinates of the rectangle corners: x = t + s, y = t - s for
    // timelike data, x = s + t, y = s - t for spacelike data.
    const Rect& r = *domain;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double t : {r.t0, r.t1}) {
      for (double s : {r.s0, r.s1}) {
        const double along = d.kind == DataKind::timelike ? t : s;
        const double across = d.kind == DataKind::timelike ? s : t;
        for (double x : {along + across, along - across}) {
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
      }
    }
    ValidationCheck dom{"domain", 0.0, lo, 0.0, true, ""};
    const double excess = std::max(I.lo - lo, hi - I.hi);
    if (!(r.t0 < r.t1 && r.s0 < r.s1)) {
      dom.pass = false;
      dom.worst = 1.0;
      dom.detail = "empty rectangle";
    } else if (!I.contains(Interval{lo, hi})) {
      dom.pass = false;
      dom.worst = excess;
      dom.at = I.lo - lo > hi - I.hi ? lo : hi;
      dom.detail = "rectangle needs the data on [" + fmt(lo) + ", " + fmt(hi) +
                   "] but it is given on [" + fmt(I.lo) + ", " + fmt(I.hi) + "]";
    }
    report.checks.push_back(dom);
  }
  return report;
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid Bjorling data: " + report.summary()), report_(std::move(report)) {}

NullDataError::NullDataError(ValidationReport report)
    : ValidationError(
          "invalid Bjorling data: gamma' is a null (lightlike) vector. Through a null curve with "
          "a prescribed normal there are several distinct timelike minimal surfaces, so the "
          "problem has no unique solution and is refused",
          std::move(report)) {}

}  // namespace bjorling
