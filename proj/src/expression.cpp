#include "dqw/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "dqw/errors.hpp"

namespace dqw {

struct Expression::Node {
  enum class Op { Const, X0, X1, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Sinh, Cosh, Exp };
  Op op = Op::Const;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x0, double x1) const {
    switch (op) {
      case Op::Const: return value;
      case Op::X0: return x0;
      case Op::X1: return x1;
      case Op::Add: return lhs->eval(x0, x1) + rhs->eval(x0, x1);
      case Op::Sub: return lhs->eval(x0, x1) - rhs->eval(x0, x1);
      case Op::Mul: return lhs->eval(x0, x1) * rhs->eval(x0, x1);
      case Op::Div: return lhs->eval(x0, x1) / rhs->eval(x0, x1);
      case Op::Pow: return std::pow(lhs->eval(x0, x1), rhs->eval(x0, x1));
      case Op::Neg: return -lhs->eval(x0, x1);
      case Op::Sin: return std::sin(lhs->eval(x0, x1));
      case Op::Cos: return std::cos(lhs->eval(x0, x1));
      case Op::Sinh: return std::sinh(lhs->eval(x0, x1));
      case Op::Cosh: return std::cosh(lhs->eval(x0, x1));
      case Op::Exp: return std::exp(lhs->eval(x0, x1));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->value = value;
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr run() {
    auto n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

  bool uses_x0 = false;
  bool uses_x1 = false;

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExpressionError("expression '" + std::string(s_) + "': " + msg + " at offset " +
                          std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    auto n = term();
    for (;;) {
      if (accept('+')) n = make(Op::Add, n, term());
      else if (accept('-')) n = make(Op::Sub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    auto n = unary();
    for (;;) {
      if (accept('*')) n = make(Op::Mul, n, unary());
      else if (accept('/')) n = make(Op::Div, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (accept('^')) return make(Op::Pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      auto n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string tail(s_.substr(pos_));
      char* end = nullptr;
      const double v = std::strtod(tail.c_str(), &end);
      if (end == tail.c_str()) fail("bad number");
      pos_ += static_cast<std::size_t>(end - tail.c_str());
      return make(Op::Const, nullptr, nullptr, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "x0") {
        uses_x0 = true;
        return make(Op::X0);
      }
      if (name == "x1") {
        uses_x1 = true;
        return make(Op::X1);
      }
      if (name == "pi") return make(Op::Const, nullptr, nullptr, std::numbers::pi);
      Op fn;
      if (name == "sin") fn = Op::Sin;
      else if (name == "cos") fn = Op::Cos;
      else if (name == "sinh") fn = Op::Sinh;
      else if (name == "cosh") fn = Op::Cosh;
      else if (name == "exp") fn = Op::Exp;
      else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      expect('(');
      auto arg = expr();
      expect(')');
      return make(fn, arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser p(text);
  Expression e;
  e.root_ = p.run();
  e.text_ = std::string(text);
  e.uses_x0_ = p.uses_x0;
  e.uses_x1_ = p.uses_x1;
  return e;
}

double Expression::operator()(double x0, double x1) const { return root_->eval(x0, x1); }

}  // namespace dqw
