#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bjorling/problem.hpp"
#include "bjorling/surface.hpp"
#include "bjorling/verify.hpp"

namespace bjorling {

/// Catalogue entry with parameters bound: data, domain and closed forms.
struct Fixture {
  FixtureSpec spec;
  ParamMap params;
  BjorlingData data;
  Rect domain;
  SurfaceFn closed_form;
  SurfaceFn closed_form_alt;  // only for role "null_pair"
};

const std::vector<FixtureSpec>& fixture_specs();
std::vector<std::string> list();

/// Throws UnknownFixture.
const FixtureSpec& fixture_spec(std::string_view name);
Fixture named_surface(std::string_view name, const ParamMap& overrides = {});
Fixture instantiate_fixture(const FixtureSpec& spec, const ParamMap& overrides = {});

/// A binding that differs from every default.
ParamMap nontrivial_params();

struct FixtureCheckOptions {
  int grid = 51;
  int boundary_samples = 200;
  Tolerances tol;
  SolveOptions solve;
};

/// Full regression for one fixture.
///
/// role "solve": solves the data, then checks the closed form on its own
/// (minimality, conformality), the solution (minimality, conformality,
/// boundary data) and their distance.
///
/// role "null_pair": checks that the solver refuses the null data, that
/// both closed forms are minimal and conformal, contain the curve along
/// t = s with normal +-W, and differ by more than 0.1 somewhere.
VerificationReport check_fixture(const Fixture& f, const FixtureCheckOptions& opts = {});

}  // namespace bjorling
