#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bjorling/builders.hpp"
#include "bjorling/curve.hpp"
#include "bjorling/expr.hpp"
#include "bjorling/surface.hpp"

namespace bjorling {

/// Curve in the JSON exchange format: three expressions in t, local
/// parameter defaults and an interval whose ends may be expressions.
struct CurveSpec {
  std::array<std::string, 3> components;
  ParamMap params;
  std::optional<std::array<std::string, 2>> interval;
};

struct NormalSpec {
  enum class Builder { curve, geodesic, planar_orthogonal };
  Builder builder = Builder::curve;
  CurveSpec curve;
  std::array<std::string, 3> plane_normal{"0", "0", "1"};
  Frame frame = Frame::canonical;
};

/// A Bjorling problem before parameter binding.
struct ProblemSpec {
  CurveSpec gamma;
  NormalSpec w;
  std::optional<DataKind> kind;  // builders infer it; required for explicit W
  std::string basepoint;         // empty: middle of the interval
  std::optional<std::array<std::string, 4>> domain;
  ParamMap params;
};

struct ClosedFormSpec {
  std::array<std::string, 3> components;  // expressions in t and s
  Frame frame = Frame::canonical;
};

struct FixtureSpec {
  std::string name;
  std::string description;
  std::string role = "solve";  // "solve" or "null_pair"
  ProblemSpec problem;
  ClosedFormSpec closed_form;
  std::optional<ClosedFormSpec> closed_form_alt;
};

/// Problem with parameters bound.
struct Problem {
  BjorlingData data;
  std::optional<Rect> domain;
  ParamMap params;
};

/// Curve-local defaults, then top-level params, then overrides.
ParamMap effective_params(const ProblemSpec& p, const ParamMap& overrides = {});

/// Value of a constant expression (no free variable) under `params`.
double eval_scalar(std::string_view src, const ParamMap& params);

Problem instantiate(const ProblemSpec& spec, const ParamMap& overrides = {});

/// Closed-form surface (t, s) -> L^3 in canonical coordinates.
SurfaceFn closed_form_function(const ClosedFormSpec& spec, const ParamMap& params);

/// JSON text <-> specs. Throw InputError on a malformed document.
ProblemSpec problem_from_json(std::string_view text);
FixtureSpec fixture_from_json(std::string_view text);
std::string to_json(const FixtureSpec& f);

ProblemSpec load_problem(const std::filesystem::path& path);

/// "k=v,k=v" -> map; InputError on malformed items.
ParamMap parse_param_list(std::string_view list);

}  // namespace bjorling
