#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opineq::expr {

// Immutable expression AST over a single real variable x.
//
// Grammar accepted by parse():
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' factor)?          // right-associative
//   base   := NUMBER | 'x' | '(' expr ')' | FUNC '(' expr ')' | '-' base
//   FUNC   := exp | log | sin | cos
// Whitespace is insignificant.  Unary minus binds tighter than '^', so
// "-x^2" parses as (-x)^2.  There is no implicit multiplication.

enum class Kind {
  constant,
  variable,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  exp,
  log,
  sin,
  cos,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  double value = 0.0;  // payload for Kind::constant
  NodePtr a;           // first operand (unary and binary kinds)
  NodePtr b;           // second operand (binary kinds only)
};

bool is_unary(Kind k);   // neg, exp, log, sin, cos
bool is_binary(Kind k);  // add, sub, mul, div, pow

NodePtr constant(double v);
NodePtr variable();
NodePtr unary(Kind k, NodePtr operand);
NodePtr binary(Kind k, NodePtr lhs, NodePtr rhs);

// Syntax error with the byte offset of the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Runtime domain failure during evaluate(): division by exact zero,
// log of a non-positive value, fractional power of a negative base.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NodePtr parse(std::string_view text);

// Renders with enough parentheses that parse(to_string(e)) is structurally
// identical to e whenever e contains no negative constants (the parser never
// produces them; a negative constant renders like a unary minus).
std::string to_string(const NodePtr& e);

// Symbolic derivative.  Applies only local simplifications (dropping
// multiplications by literal 0 and 1, etc.); the result is not normalised.
NodePtr differentiate(const NodePtr& e);

// Evaluates at x.  Integer constant exponents use exponentiation by
// squaring; everything else defers to the C math library.
double evaluate(const NodePtr& e, double x);

bool structurally_equal(const NodePtr& lhs, const NodePtr& rhs);

}  // namespace opineq::expr
