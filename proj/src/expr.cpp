#include "opineq/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>

namespace opineq::expr {

bool is_unary(Kind k) {
  switch (k) {
    case Kind::neg:
    case Kind::exp:
    case Kind::log:
    case Kind::sin:
    case Kind::cos:
      return true;
    default:
      return false;
  }
}

bool is_binary(Kind k) {
  switch (k) {
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
    case Kind::div:
    case Kind::pow:
      return true;
    default:
      return false;
  }
}

NodePtr constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = v;
  return n;
}

NodePtr variable() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  return n;
}

NodePtr unary(Kind k, NodePtr operand) {
  if (!is_unary(k)) throw std::invalid_argument("unary(): kind is not unary");
  if (!operand) throw std::invalid_argument("unary(): null operand");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(operand);
  return n;
}

NodePtr binary(Kind k, NodePtr lhs, NodePtr rhs) {
  if (!is_binary(k)) throw std::invalid_argument("binary(): kind is not binary");
  if (!lhs || !rhs) throw std::invalid_argument("binary(): null operand");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return n;
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] static void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  // Peeks past whitespace; '\0' at end of input.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr e = parse_term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return e;
      ++pos_;
      e = binary(c == '+' ? Kind::add : Kind::sub, e, parse_term());
    }
  }

  NodePtr parse_term() {
    NodePtr e = parse_factor();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return e;
      ++pos_;
      e = binary(c == '*' ? Kind::mul : Kind::div, e, parse_factor());
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (peek() != '^') return base;
    ++pos_;
    return binary(Kind::pow, base, parse_factor());  // right-associative
  }

  NodePtr parse_base() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input", pos_);
    if (c == '-') {
      ++pos_;
      return unary(Kind::neg, parse_base());
    }
    if (c == '(') {
      std::size_t open = pos_++;
      NodePtr e = parse_expr();
      if (peek() != ')') fail("unmatched '(' opened", open);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t j = pos_ + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        pos_ = j + 1;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }
    double v = 0.0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_)
      fail("malformed number", start);
    return constant(v);
  }

  NodePtr parse_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string_view id = text_.substr(start, pos_ - start);
    if (id == "x") return variable();
    Kind k;
    if (id == "exp")
      k = Kind::exp;
    else if (id == "log")
      k = Kind::log;
    else if (id == "sin")
      k = Kind::sin;
    else if (id == "cos")
      k = Kind::cos;
    else
      fail("unknown identifier '" + std::string(id) + "'", start);
    if (peek() != '(') fail("expected '(' after function name", pos_);
    std::size_t open = pos_++;
    NodePtr arg = parse_expr();
    if (peek() != ')') fail("unmatched '(' opened", open);
    ++pos_;
    return unary(k, std::move(arg));
  }
};

bool is_const(const NodePtr& e, double v) {
  return e->kind == Kind::constant && e->value == v;
}

// Factories with the local simplifications differentiate() relies on to keep
// derivative trees small.  Exact-zero folding never hides a domain error for
// expressions whose own domain is respected.
NodePtr s_add(NodePtr l, NodePtr r) {
  if (is_const(l, 0.0)) return r;
  if (is_const(r, 0.0)) return l;
  return binary(Kind::add, std::move(l), std::move(r));
}

NodePtr s_neg(NodePtr e) {
  if (e->kind == Kind::neg) return e->a;
  if (e->kind == Kind::constant) return constant(-e->value);
  return unary(Kind::neg, std::move(e));
}

NodePtr s_sub(NodePtr l, NodePtr r) {
  if (is_const(r, 0.0)) return l;
  if (is_const(l, 0.0)) return s_neg(std::move(r));
  return binary(Kind::sub, std::move(l), std::move(r));
}

NodePtr s_mul(NodePtr l, NodePtr r) {
  if (is_const(l, 0.0) || is_const(r, 0.0)) return constant(0.0);
  if (is_const(l, 1.0)) return r;
  if (is_const(r, 1.0)) return l;
  return binary(Kind::mul, std::move(l), std::move(r));
}

NodePtr s_div(NodePtr l, NodePtr r) {
  if (is_const(l, 0.0)) return constant(0.0);
  if (is_const(r, 1.0)) return l;
  return binary(Kind::div, std::move(l), std::move(r));
}

NodePtr s_pow(NodePtr l, NodePtr r) {
  if (is_const(r, 1.0)) return l;
  if (is_const(r, 0.0)) return constant(1.0);
  return binary(Kind::pow, std::move(l), std::move(r));
}

int precedence(const Node& n) {
  switch (n.kind) {
    case Kind::add:
    case Kind::sub:
      return 1;
    case Kind::mul:
    case Kind::div:
      return 2;
    case Kind::neg:
      return 3;
    case Kind::pow:
      return 4;
    case Kind::constant:
      return n.value < 0.0 ? 3 : 5;  // "-2" reads like unary minus
    default:
      return 5;
  }
}

std::string render_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void render(const NodePtr& e, int min_prec, std::string& out) {
  int prec = precedence(*e);
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e->kind) {
    case Kind::constant:
      out += render_number(e->value);
      break;
    case Kind::variable:
      out += 'x';
      break;
    case Kind::neg:
      out += '-';
      render(e->a, 5, out);  // parenthesise anything but an atom
      break;
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
    case Kind::div: {
      const char* op = e->kind == Kind::add   ? " + "
                       : e->kind == Kind::sub ? " - "
                       : e->kind == Kind::mul ? " * "
                                              : " / ";
      render(e->a, prec, out);  // left-associative
      out += op;
      render(e->b, prec + 1, out);
      break;
    }
    case Kind::pow:
      render(e->a, prec + 1, out);  // right-associative
      out += '^';
      render(e->b, prec, out);
      break;
    case Kind::exp:
    case Kind::log:
    case Kind::sin:
    case Kind::cos: {
      const char* fn = e->kind == Kind::exp   ? "exp("
                       : e->kind == Kind::log ? "log("
                       : e->kind == Kind::sin ? "sin("
                                              : "cos(";
      out += fn;
      render(e->a, 0, out);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

double int_pow(double base, long long n) {
  if (n < 0) {
    if (base == 0.0) throw EvalError("division by zero");
    return 1.0 / int_pow(base, -n);
  }
  double acc = 1.0;
  double p = base;
  while (n > 0) {
    if (n & 1) acc *= p;
    p *= p;
    n >>= 1;
  }
  return acc;
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const NodePtr& e) {
  std::string out;
  render(e, 0, out);
  return out;
}

NodePtr differentiate(const NodePtr& e) {
  switch (e->kind) {
    case Kind::constant:
      return constant(0.0);
    case Kind::variable:
      return constant(1.0);
    case Kind::add:
      return s_add(differentiate(e->a), differentiate(e->b));
    case Kind::sub:
      return s_sub(differentiate(e->a), differentiate(e->b));
    case Kind::mul:
      return s_add(s_mul(differentiate(e->a), e->b),
                   s_mul(e->a, differentiate(e->b)));
    case Kind::div:
      return s_div(s_sub(s_mul(differentiate(e->a), e->b),
                         s_mul(e->a, differentiate(e->b))),
                   s_pow(e->b, constant(2.0)));
    case Kind::pow:
      if (e->b->kind == Kind::constant) {
        double c = e->b->value;
        return s_mul(s_mul(constant(c), s_pow(e->a, constant(c - 1.0))),
                     differentiate(e->a));
      }
      // d(u^v) = u^v * (v' log u + v u'/u)
      return s_mul(e, s_add(s_mul(differentiate(e->b), unary(Kind::log, e->a)),
                            s_mul(e->b, s_div(differentiate(e->a), e->a))));
    case Kind::neg:
      return s_neg(differentiate(e->a));
    case Kind::exp:
      return s_mul(e, differentiate(e->a));
    case Kind::log:
      return s_div(differentiate(e->a), e->a);
    case Kind::sin:
      return s_mul(unary(Kind::cos, e->a), differentiate(e->a));
    case Kind::cos:
      return s_mul(s_neg(unary(Kind::sin, e->a)), differentiate(e->a));
  }
  throw std::logic_error("differentiate(): bad kind");
}

double evaluate(const NodePtr& e, double x) {
  switch (e->kind) {
    case Kind::constant:
      return e->value;
    case Kind::variable:
      return x;
    case Kind::add:
      return evaluate(e->a, x) + evaluate(e->b, x);
    case Kind::sub:
      return evaluate(e->a, x) - evaluate(e->b, x);
    case Kind::mul:
      return evaluate(e->a, x) * evaluate(e->b, x);
    case Kind::div: {
      double den = evaluate(e->b, x);
      if (den == 0.0) throw EvalError("division by zero");
      return evaluate(e->a, x) / den;
    }
    case Kind::pow: {
      double base = evaluate(e->a, x);
      if (e->b->kind == Kind::constant) {
        double c = e->b->value;
        if (c == std::floor(c) && std::abs(c) <= 1e9)
          return int_pow(base, static_cast<long long>(c));
      }
      double ex = evaluate(e->b, x);
      double r = std::pow(base, ex);
      if (std::isnan(r) && !std::isnan(base) && !std::isnan(ex))
        throw EvalError("fractional power of negative base");
      return r;
    }
    case Kind::neg:
      return -evaluate(e->a, x);
    case Kind::exp:
      return std::exp(evaluate(e->a, x));
    case Kind::log: {
      double v = evaluate(e->a, x);
      if (v <= 0.0) throw EvalError("log of non-positive value");
      return std::log(v);
    }
    case Kind::sin:
      return std::sin(evaluate(e->a, x));
    case Kind::cos:
      return std::cos(evaluate(e->a, x));
  }
  throw std::logic_error("evaluate(): bad kind");
}

bool structurally_equal(const NodePtr& lhs, const NodePtr& rhs) {
  if (lhs.get() == rhs.get()) return true;
  if (lhs->kind != rhs->kind) return false;
  if (lhs->kind == Kind::constant) return lhs->value == rhs->value;
  if (lhs->a && !structurally_equal(lhs->a, rhs->a)) return false;
  if (lhs->b && !structurally_equal(lhs->b, rhs->b)) return false;
  return true;
}

}  // namespace opineq::expr
