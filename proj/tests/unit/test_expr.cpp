#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bjorling/error.hpp"
#include "bjorling/expr.hpp"
#include "bjorling/gallery.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bjorling;

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("sinh(t)") == Expr::unary(UnaryFn::sinh, Expr::variable(0)));

  const ParamMap p{{"A", 2.0}, {"theta", 0.0}};
  const Expr e = parse("A*cos(t-theta)", p);
  const Expr want = Expr::binary(
      BinaryOp::mul, Expr::parameter("A"),
      Expr::unary(UnaryFn::cos,
                  Expr::binary(BinaryOp::sub, Expr::variable(0), Expr::parameter("theta"))));
  CHECK(e == want);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("1-2-3") == parse("(1-2)-3"));
  CHECK(parse("8/4/2") == parse("(8/4)/2"));
  CHECK(parse("1+2*3") == parse("1+(2*3)"));
  CHECK(parse("-t^2") == Expr::unary(UnaryFn::neg, Expr::power(Expr::variable(0), 2)));
  CHECK(parse("2*-t") == parse("2*(-t)"));
  CHECK(evaluate(parse("-2^2"), std::vector<double>{}) == -4.0);
}

TEST_CASE("syntax errors carry offsets") {
  try {
    parse("t^");
    FAIL("no exception");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse("sin t"), SyntaxError);
  CHECK_THROWS_AS(parse("(t+1"), SyntaxError);
  CHECK_THROWS_AS(parse("t^(1/2)"), SyntaxError);  // even denominator
  CHECK_THROWS_AS(parse("t^1.5"), SyntaxError);
  CHECK_THROWS_AS(parse("t t"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
}

TEST_CASE("unknown identifiers") {
  try {
    parse("2*A");
    FAIL("no exception");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "A");
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse("s"), UnknownIdentifier);
  ParseOptions two;
  two.variables = {"t", "s"};
  CHECK_NOTHROW(parse("t*s", two));
}

TEST_CASE("eval_d2 examples") {
  const Jet2 a = eval_d2(parse("sinh(t)"), 0.0);
  CHECK(a.value == 0.0);
  CHECK(a.d1 == 1.0);
  CHECK(a.d2 == 0.0);

  const Jet2 b = eval_d2(parse("t^3"), 2.0);
  CHECK(b.value == 8.0);
  CHECK(b.d1 == 12.0);
  CHECK(b.d2 == 12.0);

  const ParamMap p{{"A", 2.0}, {"theta", 0.0}};
  const Jet2 c = eval_d2(parse("A*cos(t-theta)", p), 0.0, p);
  CHECK(c.value == 2.0);
  CHECK(c.d1 == doctest::Approx(0.0));
  CHECK(c.d2 == -2.0);
}

TEST_CASE("eval_d2 on every elementary function matches hand derivatives") {
  const double t = 0.37;
  struct Case {
    const char* src;
    double v, d1, d2;
  };
  const Case cases[] = {
      {"sin(t)", std::sin(t), std::cos(t), -std::sin(t)},
      {"cos(t)", std::cos(t), -std::sin(t), -std::cos(t)},
      {"cosh(t)", std::cosh(t), std::sinh(t), std::cosh(t)},
      {"exp(2*t)", std::exp(2 * t), 2 * std::exp(2 * t), 4 * std::exp(2 * t)},
      {"sqrt(t)", std::sqrt(t), 0.5 / std::sqrt(t), -0.25 / (t * std::sqrt(t))},
      {"1/t", 1 / t, -1 / (t * t), 2 / (t * t * t)},
      {"t^(-2)", 1 / (t * t), -2 / (t * t * t), 6 / (t * t * t * t)},
      {"t^(1/3)", std::cbrt(t), std::cbrt(t) / (3 * t), -2 * std::cbrt(t) / (9 * t * t)},
      {"t^(2/6)", std::cbrt(t), std::cbrt(t) / (3 * t), -2 * std::cbrt(t) / (9 * t * t)},
      {"pi*t", std::numbers::pi * t, std::numbers::pi, 0.0},
  };
  for (const Case& c : cases) {
    CAPTURE(c.src);
    const Jet2 j = eval_d2(parse(c.src), t);
    CHECK(j.value == doctest::Approx(c.v).epsilon(1e-14));
    CHECK(j.d1 == doctest::Approx(c.d1).epsilon(1e-14));
    CHECK(j.d2 == doctest::Approx(c.d2).epsilon(1e-13));
  }
}

TEST_CASE("odd roots of negative numbers are real") {
  const Jet2 j = eval_d2(parse("t^(1/3)"), -8.0);
  CHECK(j.value == doctest::Approx(-2.0));
  CHECK(j.d1 == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eval_d2(parse("sqrt(t)"), -1.0), DomainError);
  CHECK_THROWS_AS(eval_d2(parse("sqrt(t)"), 0.0), DomainError);
  CHECK(eval_d2(parse("sqrt(t-t)"), 0.0).value == 0.0);
  CHECK_THROWS_AS(eval_d2(parse("1/t"), 0.0), DivisionByZero);
  CHECK_THROWS_AS(eval_d2(parse("t^(-1)"), 0.0), DivisionByZero);
}

TEST_CASE("parameters resolve at evaluation time") {
  const ParamMap p{{"c", 2.0}};
  const Expr e = parse("t/c", p);
  CHECK(e.parameters() == std::set<std::string>{"c"});
  CHECK(eval_d2(e, 1.0, {{"c", 4.0}}).value == 0.25);
  CHECK_THROWS_AS(eval_d2(e, 1.0), UnknownIdentifier);
  CHECK(eval_d2(e.bind(p), 1.0).value == 0.5);
}

TEST_CASE("derivatives agree with central differences on gallery curves") {
  const double h = 1e-5;
  for (const auto& spec : fixture_specs()) {
    const Fixture f = instantiate_fixture(spec);
    const Interval I = f.data.interval();
    const Curve& g = f.data.gamma;
    for (int i = 0; i < 100; ++i) {
      const double t = oracle::uniform(I.lo + 2 * h, I.hi - 2 * h);
      const Jet3 j = g.jet(t);
      const LVec3 fd1 = (g.value(t + h) - g.value(t - h)) / (2 * h);
      const LVec3 fd2 = (g.d1(t + h) - g.d1(t - h)) / (2 * h);
      CAPTURE(spec.name);
      CHECK(euclidean_norm(j.d1 - fd1) <= 1e-6);
      CHECK(euclidean_norm(j.d2 - fd2) <= 1e-6);
    }
  }
}

TEST_CASE("parse, print, parse is idempotent on gallery expressions") {
  ParseOptions opts;
  opts.variables = {"t", "s"};
  opts.parameters = {"A", "B", "R", "c", "theta", "a"};
  const std::vector<std::string> names{"t", "s"};
  for (const auto& spec : fixture_specs()) {
    std::vector<std::string> sources;
    for (const auto& x : spec.problem.gamma.components) sources.push_back(x);
    for (const auto& x : spec.problem.w.curve.components) {
      if (!x.empty()) sources.push_back(x);
    }
    for (const auto& x : spec.closed_form.components) sources.push_back(x);
    for (const auto& src : sources) {
      CAPTURE(src);
      const Expr once = parse(src, opts);
      const std::string printed = to_string(once, names);
      const Expr twice = parse(printed, opts);
      CHECK(twice == once);
      CHECK(to_string(twice, names) == printed);
    }
  }
}

TEST_CASE("printing negative constants round-trips") {
  const Expr e = Expr::binary(BinaryOp::sub, Expr::variable(0), Expr::constant(-2.5));
  const std::string s = to_string(e);
  CHECK(parse(s) == e);
}
