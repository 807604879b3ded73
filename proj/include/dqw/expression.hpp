#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace dqw {

// Compiled scalar expression in the coordinates x0, x1.
//
// Grammar (usual precedence, '^' right-associative and binding tighter than
// unary minus):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 'x0' | 'x1' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func   := sin | cos | sinh | cosh | exp
class Expression {
public:
  struct Node;

  static Expression parse(std::string_view text);

  double operator()(double x0, double x1) const;

  bool depends_on_x0() const { return uses_x0_; }
  bool depends_on_x1() const { return uses_x1_; }
  const std::string& text() const { return text_; }

private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  bool uses_x0_ = false;
  bool uses_x1_ = false;
};

}  // namespace dqw
