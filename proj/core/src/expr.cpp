#include "bjorling/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "bjorling/error.hpp"

namespace bjorling {

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

constexpr std::string_view function_name(UnaryFn fn) {
  switch (fn) {
    case UnaryFn::neg:
      return "-";
    case UnaryFn::sinh:
      return "sinh";
    case UnaryFn::cosh:
      return "cosh";
    case UnaryFn::sin:
      return "sin";
    case UnaryFn::cos:
      return "cos";
    case UnaryFn::exp:
      return "exp";
    case UnaryFn::sqrt:
      return "sqrt";
  }
  return "?";
}

bool lookup_function(std::string_view name, UnaryFn& fn) {
  static constexpr UnaryFn fns[] = {UnaryFn::sinh, UnaryFn::cosh, UnaryFn::sin,
                                    UnaryFn::cos,  UnaryFn::exp,  UnaryFn::sqrt};
  for (UnaryFn f : fns) {
    if (function_name(f) == name) {
      fn = f;
      return true;
    }
  }
  return false;
}

// Real power x^(p/q) with q odd; odd roots of negatives are real.
double pow_rational(double x, int p, int q) {
  if (x == 0.0 && p < 0) throw DivisionByZero("zero raised to a negative power");
  if (q == 1) return std::pow(x, p);
  const double root = q == 3 ? std::cbrt(x) : std::copysign(std::pow(std::abs(x), 1.0 / q), x);
  return std::pow(root, p);
}

// ---------------------------------------------------------------------------
// Evaluation

double param_value(const Expr::Node& n, const ParamMap& params) {
  auto it = params.find(n.name);
  if (it == params.end()) throw UnknownIdentifier(n.name, 0);
  return it->second;
}

double eval_value(const Expr::Node& n, std::span<const double> vars, const ParamMap& params) {
  switch (n.kind) {
    case Expr::Kind::constant:
      return n.value;
    case Expr::Kind::variable:
      if (static_cast<std::size_t>(n.variable) >= vars.size()) {
        throw DomainError("expression references an unbound variable");
      }
      return vars[static_cast<std::size_t>(n.variable)];
    case Expr::Kind::parameter:
      return param_value(n, params);
    case Expr::Kind::unary: {
      const double a = eval_value(*n.lhs, vars, params);
      switch (n.fn) {
        case UnaryFn::neg:
          return -a;
        case UnaryFn::sinh:
          return std::sinh(a);
        case UnaryFn::cosh:
          return std::cosh(a);
        case UnaryFn::sin:
          return std::sin(a);
        case UnaryFn::cos:
          return std::cos(a);
        case UnaryFn::exp:
          return std::exp(a);
        case UnaryFn::sqrt:
          if (a < 0.0) throw DomainError("sqrt of a negative number");
          return std::sqrt(a);
      }
      break;
    }
    case Expr::Kind::binary: {
      const double a = eval_value(*n.lhs, vars, params);
      const double b = eval_value(*n.rhs, vars, params);
      switch (n.op) {
        case BinaryOp::add:
          return a + b;
        case BinaryOp::sub:
          return a - b;
        case BinaryOp::mul:
          return a * b;
        case BinaryOp::div:
          if (b == 0.0) throw DivisionByZero("division by zero");
          return a / b;
      }
      break;
    }
    case Expr::Kind::power:
      return pow_rational(eval_value(*n.lhs, vars, params), n.num, n.den);
  }
  return 0.0;
}

Jet2 eval_jet(const Expr::Node& n, const Jet2& t, const ParamMap& params) {
  switch (n.kind) {
    case Expr::Kind::constant:
      return Jet2::constant(n.value);
    case Expr::Kind::variable:
      if (n.variable != 0) throw DomainError("jet evaluation supports the single variable t");
      return t;
    case Expr::Kind::parameter:
      return Jet2::constant(param_value(n, params));
    case Expr::Kind::unary: {
      const Jet2 a = eval_jet(*n.lhs, t, params);
      const double v = a.value;
      switch (n.fn) {
        case UnaryFn::neg:
          return -a;
        case UnaryFn::sinh:
          return compose(a, std::sinh(v), std::cosh(v), std::sinh(v));
        case UnaryFn::cosh:
          return compose(a, std::cosh(v), std::sinh(v), std::cosh(v));
        case UnaryFn::sin:
          return compose(a, std::sin(v), std::cos(v), -std::sin(v));
        case UnaryFn::cos:
          return compose(a, std::cos(v), -std::sin(v), -std::cos(v));
        case UnaryFn::exp: {
          const double e = std::exp(v);
          return compose(a, e, e, e);
        }
        case UnaryFn::sqrt: {
          if (v < 0.0) throw DomainError("sqrt of a negative number");
          if (v == 0.0) {
            if (a.d1 != 0.0 || a.d2 != 0.0) {
              throw DomainError("sqrt is not differentiable at 0");
            }
            return Jet2::constant(0.0);
          }
          const double r = std::sqrt(v);
          return compose(a, r, 0.5 / r, -0.25 / (r * v));
        }
      }
      break;
    }
    case Expr::Kind::binary: {
      const Jet2 a = eval_jet(*n.lhs, t, params);
      const Jet2 b = eval_jet(*n.rhs, t, params);
      switch (n.op) {
        case BinaryOp::add:
          return a + b;
        case BinaryOp::sub:
          return a - b;
        case BinaryOp::mul:
          return a * b;
        case BinaryOp::div: {
          if (b.value == 0.0) throw DivisionByZero("division by zero");
          const double q = a.value / b.value;
          const double q1 = (a.d1 - q * b.d1) / b.value;
          const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.value;
          return {q, q1, q2};
        }
      }
      break;
    }
    case Expr::Kind::power: {
      const Jet2 a = eval_jet(*n.lhs, t, params);
      const int p = n.num;
      const int q = n.den;
      const double r = static_cast<double>(p) / q;
      const double f = pow_rational(a.value, p, q);
      const bool constant_arg = a.d1 == 0.0 && a.d2 == 0.0;
      if (constant_arg) return Jet2::constant(f);
      const double df = p == 0 ? 0.0 : r * pow_rational(a.value, p - q, q);
      const double d2f = (p == 0 || p == q) ? 0.0 : r * (r - 1.0) * pow_rational(a.value, p - 2 * q, q);
      return compose(a, f, df, d2f);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& options) : src_(src), options_(options) {}

  Expr parse_all() {
    skip_ws();
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    if (pos_ < src_.size()) {
      msg += ", found '";
      msg += src_[pos_];
      msg += "'";
    } else {
      msg += ", found end of input";
    }
    throw SyntaxError(msg, pos_, std::move(expected));
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) {
      Expr operand = parse_unary();
      // A negated literal is a negative constant, so printed trees reparse equal.
      if (operand.kind() == Expr::Kind::constant) return Expr::constant(-operand.node().value);
      return Expr::unary(UnaryFn::neg, operand);
    }
    return parse_factor();
  }

  Expr parse_factor() {
    Expr base = parse_base();
    if (!accept('^')) return base;
    skip_ws();
    if (accept('(')) {
      const bool negative = accept('-');
      int num = parse_integer();
      if (negative) num = -num;
      int den = 1;
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) {
          pos_ = at;
          fail({"nonzero integer"});
        }
        const int g = std::gcd(num, den);
        if ((den / g) % 2 == 0) {
          pos_ = at;
          fail({"odd denominator"});
        }
      }
      expect(')');
      return Expr::power(base, num, den);
    }
    return Expr::power(base, parse_integer(), 1);
  }

  int parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail({"integer", "("});
    int value = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail({"integer within range"});
    }
    (void)ptr;
    return value;
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= src_.size()) fail({"number", "identifier", "(", "-"});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail({"number", "identifier", "(", "-"});
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - from;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) {
      pos_ = start;
      fail({"number"});
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark + 1;
        fail({"exponent digits"});
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) {
      pos_ = start;
      fail({"number"});
    }
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);

    UnaryFn fn{};
    if (lookup_function(name, fn)) {
      expect('(');
      Expr arg = parse_expr();
      expect(')');
      return Expr::unary(fn, arg);
    }
    for (std::size_t i = 0; i < options_.variables.size(); ++i) {
      if (options_.variables[i] == name) return Expr::variable(static_cast<int>(i));
    }
    if (options_.parameters.find(name) != options_.parameters.end()) {
      return Expr::parameter(std::string(name));
    }
    if (name == "pi") return Expr::constant(std::numbers::pi);
    throw UnknownIdentifier(std::string(name), start);
  }

  std::string_view src_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (v < 0.0 || (v == 0.0 && std::signbit(v))) return "(" + s + ")";
  return s;
}

void print_node(const Expr::Node& n, std::span<const std::string> vars, std::string& out) {
  switch (n.kind) {
    case Expr::Kind::constant:
      out += format_number(n.value);
      return;
    case Expr::Kind::variable:
      if (static_cast<std::size_t>(n.variable) < vars.size()) {
        out += vars[static_cast<std::size_t>(n.variable)];
      } else {
        out += n.variable == 0 ? "t" : (n.variable == 1 ? "s" : "v" + std::to_string(n.variable));
      }
      return;
    case Expr::Kind::parameter:
      out += n.name;
      return;
    case Expr::Kind::unary:
      if (n.fn == UnaryFn::neg) {
        out += "(-";
        print_node(*n.lhs, vars, out);
        out += ")";
      } else {
        out += function_name(n.fn);
        out += "(";
        print_node(*n.lhs, vars, out);
        out += ")";
      }
      return;
    case Expr::Kind::binary: {
      static constexpr std::string_view ops[] = {" + ", " - ", " * ", " / "};
      out += "(";
      print_node(*n.lhs, vars, out);
      out += ops[static_cast<int>(n.op)];
      print_node(*n.rhs, vars, out);
      out += ")";
      return;
    }
    case Expr::Kind::power:
      out += "(";
      print_node(*n.lhs, vars, out);
      if (n.den == 1 && n.num >= 0) {
        out += "^" + std::to_string(n.num);
      } else {
        out += "^(" + std::to_string(n.num);
        if (n.den != 1) out += "/" + std::to_string(n.den);
        out += ")";
      }
      out += ")";
      return;
  }
}

bool nodes_equal(const Expr::Node& a, const Expr::Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::constant:
      return a.value == b.value;
    case Expr::Kind::variable:
      return a.variable == b.variable;
    case Expr::Kind::parameter:
      return a.name == b.name;
    case Expr::Kind::unary:
      return a.fn == b.fn && nodes_equal(*a.lhs, *b.lhs);
    case Expr::Kind::binary:
      return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    case Expr::Kind::power:
      return a.num == b.num && a.den == b.den && nodes_equal(*a.lhs, *b.lhs);
  }
  return false;
}

NodePtr bind_node(const NodePtr& n, const ParamMap& params) {
  switch (n->kind) {
    case Expr::Kind::constant:
    case Expr::Kind::variable:
      return n;
    case Expr::Kind::parameter: {
      auto node = std::make_shared<Expr::Node>();
      node->kind = Expr::Kind::constant;
      node->value = param_value(*n, params);
      return node;
    }
    case Expr::Kind::unary:
    case Expr::Kind::binary:
    case Expr::Kind::power: {
      auto node = std::make_shared<Expr::Node>(*n);
      node->lhs = bind_node(n->lhs, params);
      if (n->rhs) node->rhs = bind_node(n->rhs, params);
      return node;
    }
  }
  return n;
}

void collect_parameters(const Expr::Node& n, std::set<std::string>& out) {
  if (n.kind == Expr::Kind::parameter) out.insert(n.name);
  if (n.lhs) collect_parameters(*n.lhs, out);
  if (n.rhs) collect_parameters(*n.rhs, out);
}

}  // namespace

Expr::Expr() : node_(std::make_shared<Node>()) {}

Expr Expr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::variable(int index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->variable = index;
  return Expr(std::move(n));
}

Expr Expr::parameter(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::parameter;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::unary(UnaryFn fn, const Expr& arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::unary;
  n->fn = fn;
  n->lhs = arg.node_;
  return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, const Expr& lhs, const Expr& rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->op = op;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::power(const Expr& base, int num, int den) {
  if (den == 0) throw DomainError("zero denominator in exponent");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den % 2 == 0) throw DomainError("rational exponents need an odd denominator");
  auto n = std::make_shared<Node>();
  n->kind = Kind::power;
  n->num = num;
  n->den = den;
  n->lhs = base.node_;
  return Expr(std::move(n));
}

Expr Expr::bind(const ParamMap& params) const { return Expr(bind_node(node_, params)); }

std::set<std::string> Expr::parameters() const {
  std::set<std::string> out;
  collect_parameters(*node_, out);
  return out;
}

bool Expr::operator==(const Expr& other) const { return nodes_equal(*node_, *other.node_); }

Expr parse(std::string_view src, const ParseOptions& options) {
  return Parser(src, options).parse_all();
}

Expr parse(std::string_view src, const ParamMap& params) {
  ParseOptions options;
  for (const auto& [name, value] : params) options.parameters.insert(name);
  return parse(src, options);
}

std::string to_string(const Expr& e, std::span<const std::string> variable_names) {
  std::string out;
  print_node(e.node(), variable_names, out);
  return out;
}

Jet2 eval_d2(const Expr& e, double t, const ParamMap& params) {
  return eval_jet(e.node(), Jet2::variable(t), params);
}

double evaluate(const Expr& e, std::span<const double> variables, const ParamMap& params) {
  return eval_value(e.node(), variables, params);
}

}  // namespace bjorling
