#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bjorling {

using ParamMap = std::map<std::string, double, std::less<>>;

/// Value together with its first and second derivative along one variable.
/// Arithmetic on Jet2 is forward-mode differentiation truncated at order two.
struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet2 constant(double v) noexcept { return {v, 0.0, 0.0}; }
  static constexpr Jet2 variable(double v) noexcept { return {v, 1.0, 0.0}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) noexcept {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) noexcept {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet2 operator-(const Jet2& a) noexcept { return {-a.value, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) noexcept {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}
/// Chain rule for f(g) given f(g), f'(g), f''(g).
constexpr Jet2 compose(const Jet2& g, double f, double df, double d2f) noexcept {
  return {f, df * g.d1, d2f * g.d1 * g.d1 + df * g.d2};
}

enum class UnaryFn { neg, sinh, cosh, sin, cos, exp, sqrt };
enum class BinaryOp { add, sub, mul, div };

/// Immutable expression tree over a small set of free variables (index 0 is
/// `t`), named parameters, the elementary functions of UnaryFn and powers with
/// integer or odd-denominator rational exponents.
class Expr {
 public:
  enum class Kind { constant, variable, parameter, unary, binary, power };

  struct Node {
    Kind kind = Kind::constant;
    double value = 0.0;
    int variable = 0;
    std::string name;
    UnaryFn fn = UnaryFn::neg;
    BinaryOp op = BinaryOp::add;
    int num = 1;
    int den = 1;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expr();

  static Expr constant(double v);
  static Expr variable(int index);
  static Expr parameter(std::string name);
  static Expr unary(UnaryFn fn, const Expr& arg);
  static Expr binary(BinaryOp op, const Expr& lhs, const Expr& rhs);
  /// base^(num/den); the fraction is reduced and den must be odd and positive.
  static Expr power(const Expr& base, int num, int den = 1);

  Kind kind() const noexcept { return node_->kind; }
  const Node& node() const noexcept { return *node_; }

  /// Replace every parameter reference with its value from `params`.
  /// Throws UnknownIdentifier for a reference missing from the map.
  Expr bind(const ParamMap& params) const;

  std::set<std::string> parameters() const;

  /// Structural equality (constants compared exactly).
  bool operator==(const Expr& other) const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  /// Free variable names; variable i is referenced by index i.
  std::vector<std::string> variables{"t"};
  std::set<std::string, std::less<>> parameters;
};

/// Recursive-descent parser. Grammar:
///
///   expr     := term (("+"|"-") term)*
///   term     := unary (("*"|"/") unary)*
///   unary    := "-" unary | factor
///   factor   := base ("^" exponent)?
///   base     := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
///   exponent := INTEGER | "(" ["-"] INTEGER ["/" INTEGER] ")"
///
/// so `-t^2` is -(t^2). `pi` is predefined. Throws SyntaxError (with byte
/// offset and expected tokens) or UnknownIdentifier.
Expr parse(std::string_view src, const ParseOptions& options = {});
Expr parse(std::string_view src, const ParamMap& params);

/// Fully parenthesised text that parses back to an equal tree.
std::string to_string(const Expr& e, std::span<const std::string> variable_names = {});

/// Value, first and second t-derivative (exact forward-mode propagation).
/// Throws DomainError (e.g. sqrt of a negative) or DivisionByZero.
Jet2 eval_d2(const Expr& e, double t, const ParamMap& params = {});

/// Plain value with explicit variable values (variables[i] for index i).
double evaluate(const Expr& e, std::span<const double> variables, const ParamMap& params = {});

}  // namespace bjorling
