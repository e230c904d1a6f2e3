#pragma once

// Expression language for transform functions F(k).
//
//   expr    := expr ('+' | '-') expr | expr ('*' | '/') expr
//            | '-' expr | expr '^' expr | primary
//   primary := number | identifier | identifier '(' expr ')' | '(' expr ')'
//
// Precedence, tightest first: '^' (right-associative), unary '-', '*' '/',
// '+' '-'. The right operand of '^' may itself start with '-' (2^-1).
// Numbers are decimal with optional fraction and exponent; there are no
// complex literals (write 1+2*i). Implicit multiplication is not supported.
// Constants: pi, e, i. Functions (all unary, principal branches): exp, log,
// sqrt, sin, cos, sinh, cosh, gamma, zeta. Any other identifier is a
// variable.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glasser/error.hpp"
#include "glasser/kernel.hpp"
#include "glasser/numerics.hpp"

namespace glasser::expr {

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

enum class Constant { kPi, kE, kI };
enum class BinaryOp { kAdd, kSub, kMul, kDiv, kPow };
enum class Function { kExp, kLog, kSqrt, kSin, kCos, kSinh, kCosh, kGamma, kZeta };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  double value;
};
struct ConstantRef {
  Constant which;
};
struct Variable {
  std::string name;
};
struct Negate {
  ExprPtr child;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Call {
  Function function;
  std::vector<ExprPtr> args;
};

/// Immutable AST node.
struct Expr {
  std::variant<Number, ConstantRef, Variable, Negate, Binary, Call> node;
};

using Bindings = std::map<std::string, Complex, std::less<>>;

ExprPtr make_number(double value);
ExprPtr make_constant(Constant c);
ExprPtr make_variable(std::string name);
ExprPtr make_negate(ExprPtr child);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(Function f, ExprPtr arg);

std::string_view name_of(Function f);
std::string_view name_of(Constant c);

/// Throws ParseError (byte offset + message) on malformed input or an
/// unknown function name.
ExprPtr parse(std::string_view text);

/// Throws InputError on an unbound variable and NumericError on domain
/// failures (division by zero, log 0, gamma/zeta poles, overflow).
Complex evaluate(const Expr& ast, const Bindings& bindings);

/// Fully parenthesized canonical form; parse(print(e)) rebuilds e exactly.
std::string print(const Expr& ast);

std::set<std::string> free_variables(const Expr& ast);
bool uses_imaginary_unit(const Expr& ast);

/// Wraps an expression in `variable` as a transform F. Every other free
/// variable must be bound in `bindings` (InputError otherwise). The Schwarz
/// flag is set when the expression has no `i` and every binding is real.
TransformFunction to_transform(ExprPtr ast, Bindings bindings,
                               std::string variable = "k");

}  // namespace glasser::expr
