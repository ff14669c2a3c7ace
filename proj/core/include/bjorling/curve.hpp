#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bjorling/domain.hpp"
#include "bjorling/error.hpp"
#include "bjorling/expr.hpp"
#include "bjorling/lorentz.hpp"

namespace bjorling {

/// Position with first and second derivative of a curve in L^3. Derived
/// curves that cannot supply a derivative leave it NaN and report a lower
/// Curve::order().
struct Jet3 {
  LVec3 value;
  LVec3 d1;
  LVec3 d2;
};

/// Curve t -> L^3 on a closed interval. Cheap to copy (shared, immutable).
class Curve {
 public:
  class Source {
   public:
    virtual ~Source() = default;
    virtual Jet3 jet(double t) const = 0;
    /// Number of trustworthy derivatives in jet(): 0, 1 or 2.
    virtual int order() const { return 2; }
  };

  Curve() = default;
  Curve(std::shared_ptr<const Source> source, Interval interval)
      : source_(std::move(source)), interval_(interval) {}

  static Curve from_functions(std::function<Jet3(double)> jet, Interval interval, int order = 2);

  /// Throws DomainError when t is outside interval().
  Jet3 jet(double t) const;
  LVec3 value(double t) const { return jet(t).value; }
  LVec3 d1(double t) const { return jet(t).d1; }
  LVec3 d2(double t) const { return jet(t).d2; }

  const Interval& interval() const noexcept { return interval_; }
  int order() const { return source_ ? source_->order() : 0; }
  bool valid() const noexcept { return static_cast<bool>(source_); }

  /// Same map on a sub-interval (or a wider one the source tolerates).
  Curve restricted(Interval interval) const { return Curve(source_, interval); }

 private:
  std::shared_ptr<const Source> source_;
  Interval interval_;
};

/// Three expressions in `t` with bound parameters.
class CurveExpr {
 public:
  CurveExpr(std::array<Expr, 3> components, Interval interval, ParamMap params = {});

  /// Parses each component; parameter names come from `params`.
  static CurveExpr parse(const std::array<std::string, 3>& components, Interval interval,
                         const ParamMap& params = {});

  Jet3 eval_d2(double t) const;
  LVec3 value(double t) const { return eval_d2(t).value; }

  const std::array<Expr, 3>& components() const noexcept { return components_; }
  const Interval& interval() const noexcept { return interval_; }
  const ParamMap& params() const noexcept { return params_; }

  Curve curve() const;

 private:
  std::array<Expr, 3> components_;
  std::array<Expr, 3> bound_;
  Interval interval_;
  ParamMap params_;
};

enum class DataKind { timelike, spacelike };

std::string_view to_string(DataKind k) noexcept;

/// Input of the Bjorling problem: curve, unit normal field along it, the
/// causal character of the curve and the integration basepoint.
struct BjorlingData {
  Curve gamma;
  Curve w_field;
  DataKind kind = DataKind::timelike;
  double basepoint = 0.0;

  /// Common interval of gamma and W.
  Interval interval() const { return intersect(gamma.interval(), w_field.interval()); }
};

struct ValidationCheck {
  std::string name;
  double worst = 0.0;  // largest violation found
  double at = 0.0;     // parameter where it occurs
  double tol = 0.0;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  /// gamma' is null at some sample (the problem is not well posed there).
  bool null_curve = false;

  bool pass() const noexcept;
  std::string summary() const;
};

/// Orthogonality |<gamma', W>| <= 1e-9 max(1, |gamma'|_E |W|_E), unit length
/// |<W, W> - 1| <= 1e-9 and causal character of gamma' matching d.kind, on
/// n equispaced samples of the data interval. With `domain`, also checks
/// that the rectangle fits in the causal diamond of the interval.
ValidationReport validate_data(const BjorlingData& d, int n_samples = 201,
                               std::optional<Rect> domain = std::nullopt);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  ValidationError(std::string message, ValidationReport report)
      : Error(std::move(message)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// gamma' is null: a minimal surface through such a curve with prescribed
/// normal exists but is not unique, so the solver refuses it.
class NullDataError : public ValidationError {
 public:
  explicit NullDataError(ValidationReport report);
};

}  // namespace bjorling
