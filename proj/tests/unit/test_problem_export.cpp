#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bjorling/error.hpp"
#include "bjorling/export.hpp"
#include "bjorling/gallery.hpp"
#include "bjorling/problem.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace bjorling;

namespace {

const char* helicoid_json = R"json({
  "kind": "timelike",
  "params": {"c": 2},
  "gamma": {"x1": "sinh(t)/c", "x2": "0", "x3": "0", "interval": [-2, "2"]},
  "w": {"x1": "0", "x2": "-1/cosh(t)", "x3": "sinh(t)/cosh(t)"},
  "basepoint": 0,
  "domain": [-1, 1, -0.8, "4/5"]
})json";

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("problem documents") {
  const ProblemSpec spec = problem_from_json(helicoid_json);
  const Problem p = instantiate(spec);
  CHECK(p.data.kind == DataKind::timelike);
  CHECK(p.data.interval() == Interval{-2, 2});
  REQUIRE(p.domain.has_value());
  CHECK(p.domain->s1 == 0.8);
  CHECK(p.data.gamma.value(1.0).x1 == doctest::Approx(std::sinh(1.0) / 2));
  CHECK(instantiate(spec, {{"c", 4.0}}).data.gamma.value(1.0).x1 ==
        doctest::Approx(std::sinh(1.0) / 4));
}

TEST_CASE("malformed problem documents") {
  CHECK_THROWS_AS(problem_from_json("{"), InputError);
  CHECK_THROWS_AS(problem_from_json("[]"), InputError);
  CHECK_THROWS_AS(problem_from_json(R"json({"gamma": {"x1": "t", "x2": "0", "x3": "0"}})json"), InputError);
  CHECK_THROWS_AS(problem_from_json(R"json({"kind": "lightlike",
      "gamma": {"x1": "t", "x2": "0", "x3": "0", "interval": [0, 1]},
      "w": {"x1": "0", "x2": "1", "x3": "0"}})json"),
                  InputError);
  // Explicit W without a kind.
  const ProblemSpec p = problem_from_json(R"json({
      "gamma": {"x1": "t", "x2": "0", "x3": "0", "interval": [0, 1]},
      "w": {"x1": "0", "x2": "1", "x3": "0"}})json");
  CHECK_THROWS_AS(instantiate(p), InputError);
}

TEST_CASE("builder documents") {
  const ProblemSpec spec = problem_from_json(R"json({
      "gamma": {"x1": "t", "x2": "cos(t)", "x3": "0", "interval": [-1, 1]},
      "w": {"builder": "planar_orthogonal", "plane_normal": [0, 0, 1]}})json");
  const Problem p = instantiate(spec);
  CHECK(p.data.kind == DataKind::timelike);
  CHECK(distance(p.data.w_field.value(0.0), LVec3{0, -1, 0}) <= 1e-15);
}

TEST_CASE("fixture JSON round trip") {
  for (const auto& spec : fixture_specs()) {
    const std::string once = to_json(spec);
    const FixtureSpec back = fixture_from_json(once);
    CAPTURE(spec.name);
    CHECK(back.name == spec.name);
    CHECK(back.role == spec.role);
    CHECK(back.problem.gamma.components == spec.problem.gamma.components);
    CHECK(to_json(back) == once);
  }
}

TEST_CASE("scalars and parameter lists") {
  CHECK(eval_scalar("-pi/2+0.1", {}) == doctest::Approx(-std::numbers::pi / 2 + 0.1));
  CHECK(eval_scalar("-B-1.1", {{"B", 0.5}}) == doctest::Approx(-1.6));
  CHECK_THROWS_AS(eval_scalar("t", {}), UnknownIdentifier);

  const ParamMap m = parse_param_list("A=2, theta=-0.5");
  CHECK(m.at("A") == 2.0);
  CHECK(m.at("theta") == -0.5);
  CHECK(parse_param_list("").empty());
  CHECK_THROWS_AS(parse_param_list("A"), InputError);
  CHECK_THROWS_AS(parse_param_list("A=x"), InputError);
}

TEST_CASE("closed forms in the null frame") {
  const SurfaceFn f = closed_form_function({{"t", "s", "0"}, Frame::null}, {});
  const double h = std::sqrt(2.0) / 2.0;
  CHECK(distance(f(1.0, 2.0), LVec3{h, 3 * h, 0}) <= 1e-15);
}

TEST_CASE("CSV export") {
  const Mesh m = sample_grid(oracle::helicoid, {-1, 1, -0.8, 0.8}, 51, 51);
  std::ostringstream os;
  write_csv(os, m);
  const std::string csv = os.str();
  CHECK(csv.rfind("t,s,x1,x2,x3\n", 0) == 0);
  CHECK(count_lines(csv, "") == 51 * 51 + 1);

  // 17 significant digits: values reparse exactly.
  std::istringstream in(csv);
  const Mesh back = read_csv(in);
  CHECK(back.nt == 51);
  CHECK(back.ns == 51);
  CHECK(back.rect == m.rect);
  CHECK(back.points == m.points);
}

TEST_CASE("CSV import rejects bad input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), InputError);
  std::istringstream header("a,b\n");
  CHECK_THROWS_AS(read_csv(header), InputError);
  std::istringstream ragged("t,s,x1,x2,x3\n0,0,0,0,0\n0,1,0,0,0\n1,0,0,0,0\n");
  CHECK_THROWS_AS(read_csv(ragged), InputError);
  std::istringstream junk("t,s,x1,x2,x3\n0,0,zero,0,0\n");
  CHECK_THROWS_AS(read_csv(junk), InputError);
}

TEST_CASE("OBJ export") {
  const Mesh m = sample_grid(oracle::helicoid, {-1, 1, -0.8, 0.8}, 51, 51);
  std::ostringstream os;
  write_obj(os, m);
  const std::string obj = os.str();
  CHECK(count_lines(obj, "v ") == 2601);
  CHECK(count_lines(obj, "f ") == 5000);

  // Indices are 1-based and within range.
  std::istringstream in(obj);
  long lo = 1 << 30;
  long hi = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("f ", 0) != 0) continue;
    std::istringstream f(line.substr(2));
    for (long k; f >> k;) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  }
  CHECK(lo == 1);
  CHECK(hi == 2601);
}

TEST_CASE("mesh JSON export") {
  const Mesh m = sample_grid(oracle::helicoid, {-1, 1, -0.8, 0.8}, 5, 4);
  std::ostringstream os;
  write_mesh_json(os, m);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["nt"] == 5);
  CHECK(j["ns"] == 4);
  CHECK(j["points"].size() == 20);
  CHECK(j["points"][7][2].get<double>() == m.points[7].x1);
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.add("minimality", {1e-9, 0.5, -0.25}, 1e-5);
  r.add("timelike_margin", {0.5, 0, 0}, 0.0, true);
  const auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["minimality"]["max_residual"].get<double>() == 1e-9);
  CHECK(j["minimality"]["at"][1].get<double>() == -0.25);
  CHECK(j["minimality"]["pass"] == true);
  CHECK(j["timelike_margin"]["kind"] == "lower_bound");
  CHECK_FALSE(j["minimality"].contains("kind"));
}
