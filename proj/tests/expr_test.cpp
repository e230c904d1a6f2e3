#include <cmath>
#include <cstring>
#include <functional>
#include <random>
#include <string>

#include "doctest.h"
#include "glasser/expr.hpp"

using glasser::Complex;
using glasser::kPi;
namespace ex = glasser::expr;

namespace {

Complex eval(const std::string& text, const ex::Bindings& b = {}) {
  return ex::evaluate(*ex::parse(text), b);
}

std::size_t error_offset(const std::string& text) {
  try {
    ex::parse(text);
  } catch (const ex::ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool structurally_equal(const ex::Expr& a, const ex::Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* n = std::get_if<ex::Number>(&a.node)) {
    return same_bits(n->value, std::get<ex::Number>(b.node).value);
  }
  if (const auto* c = std::get_if<ex::ConstantRef>(&a.node)) {
    return c->which == std::get<ex::ConstantRef>(b.node).which;
  }
  if (const auto* v = std::get_if<ex::Variable>(&a.node)) {
    return v->name == std::get<ex::Variable>(b.node).name;
  }
  if (const auto* g = std::get_if<ex::Negate>(&a.node)) {
    return structurally_equal(*g->child, *std::get<ex::Negate>(b.node).child);
  }
  if (const auto* x = std::get_if<ex::Binary>(&a.node)) {
    const auto& y = std::get<ex::Binary>(b.node);
    return x->op == y.op && structurally_equal(*x->lhs, *y.lhs) &&
           structurally_equal(*x->rhs, *y.rhs);
  }
  const auto& x = std::get<ex::Call>(a.node);
  const auto& y = std::get<ex::Call>(b.node);
  return x.function == y.function && x.args.size() == y.args.size() &&
         structurally_equal(*x.args[0], *y.args[0]);
}

// Random trees. Literals are non-negative because the grammar has no signed
// literals: -2 is a negation of 2.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  ex::ExprPtr tree(int depth, bool wide_numbers) {
    const int pick = depth == 0 ? std::uniform_int_distribution<int>(0, 2)(rng_)
                                : std::uniform_int_distribution<int>(0, 9)(rng_);
    switch (pick) {
      case 0:
        return ex::make_number(number(wide_numbers));
      case 1:
        return ex::make_constant(
            static_cast<ex::Constant>(std::uniform_int_distribution<int>(0, 2)(rng_)));
      case 2:
        return ex::make_variable(std::uniform_int_distribution<int>(0, 1)(rng_) ? "k" : "b");
      case 3:
        return ex::make_negate(tree(depth - 1, wide_numbers));
      case 4: {
        const ex::Function safe[] = {ex::Function::kExp, ex::Function::kSin,
                                     ex::Function::kCos, ex::Function::kSqrt};
        return ex::make_call(safe[std::uniform_int_distribution<int>(0, 3)(rng_)],
                             tree(depth - 1, wide_numbers));
      }
      default: {
        const auto op =
            static_cast<ex::BinaryOp>(std::uniform_int_distribution<int>(0, 4)(rng_));
        return ex::make_binary(op, tree(depth - 1, wide_numbers),
                               tree(depth - 1, wide_numbers));
      }
    }
  }

 private:
  double number(bool wide) {
    if (!wide) return std::uniform_int_distribution<int>(1, 8)(rng_) * 0.25;
    const double mant = std::uniform_real_distribution<double>(0.0, 10.0)(rng_);
    const int exp10 = std::uniform_int_distribution<int>(-300, 300)(rng_);
    return mant * std::pow(10.0, exp10);
  }

  std::mt19937_64 rng_;
};

int precedence(const ex::Expr& e) {
  if (const auto* b = std::get_if<ex::Binary>(&e.node)) {
    switch (b->op) {
      case ex::BinaryOp::kAdd:
      case ex::BinaryOp::kSub: return 1;
      case ex::BinaryOp::kMul:
      case ex::BinaryOp::kDiv: return 2;
      case ex::BinaryOp::kPow: return 4;
    }
  }
  if (std::holds_alternative<ex::Negate>(e.node)) return 3;
  return 5;
}

// Prints with only the parentheses the precedence rules require.
std::string minimal(const ex::Expr& e) {
  const auto wrap = [](const ex::Expr& c, bool paren) {
    return paren ? "(" + minimal(c) + ")" : minimal(c);
  };
  if (const auto* g = std::get_if<ex::Negate>(&e.node)) {
    return "-" + wrap(*g->child, precedence(*g->child) < 3);
  }
  if (const auto* b = std::get_if<ex::Binary>(&e.node)) {
    const int p = precedence(e);
    const int pl = precedence(*b->lhs), pr = precedence(*b->rhs);
    const char sym[] = {'+', '-', '*', '/', '^'};
    if (b->op == ex::BinaryOp::kPow) {
      // Right-associative; a negation may follow '^' directly.
      const bool neg_rhs = std::holds_alternative<ex::Negate>(b->rhs->node);
      return wrap(*b->lhs, pl <= p) + "^" + wrap(*b->rhs, pr < p && !neg_rhs);
    }
    return wrap(*b->lhs, pl < p) + sym[static_cast<int>(b->op)] + wrap(*b->rhs, pr <= p);
  }
  if (const auto* c = std::get_if<ex::Call>(&e.node)) {
    return std::string(ex::name_of(c->function)) + "(" + minimal(*c->args[0]) + ")";
  }
  return ex::print(e);
}

}  // namespace

TEST_CASE("parse and print examples") {
  CHECK(ex::print(*ex::parse("gamma(4*a*k/pi^2 + b)")) == "gamma(((((4*a)*k)/(pi^2))+b))");
  CHECK(ex::print(*ex::parse("1/(k+2)")) == "(1/(k+2))");
  CHECK(ex::print(*ex::parse("-k^2")) == "(-(k^2))");
  CHECK(ex::print(*ex::parse("2^3^2")) == "(2^(3^2))");
  CHECK(ex::print(*ex::parse("2^-1")) == "(2^(-1))");
  CHECK(ex::print(*ex::parse("1-2-3")) == "((1-2)-3)");
  CHECK(ex::print(*ex::parse("  exp( -0.3*k*k )")) == "exp((((-0.3)*k)*k))");
  CHECK(ex::print(*ex::parse("1.5e-3")) == "0.0015");
  CHECK(ex::print(*ex::parse("--k")) == "(-(-k))");
}

TEST_CASE("operator precedence by value") {
  CHECK(eval("-2^2") == Complex{-4.0, 0.0});
  CHECK(eval("2^3^2") == Complex{512.0, 0.0});
  CHECK(eval("2^-1") == Complex{0.5, 0.0});
  CHECK(eval("1-2-3") == Complex{-4.0, 0.0});
  CHECK(eval("8/4/2") == Complex{1.0, 0.0});
  CHECK(eval("1+2*3") == Complex{7.0, 0.0});
  CHECK(eval("(1+2)*3") == Complex{9.0, 0.0});
  CHECK(eval("-3*2") == Complex{-6.0, 0.0});
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("2*") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("2k") == 1);
  CHECK(error_offset("(1+2") == 4);
  CHECK(error_offset("1+2)") == 3);
  CHECK(error_offset("k + foo(1)") == 4);
  CHECK(error_offset("exp(1, 2)") == 5);
  CHECK(error_offset("exp") == 3);
  CHECK(error_offset("1 $ 2") == 2);
  CHECK(error_offset("1e400") == 0);
  try {
    ex::parse("2*");
  } catch (const ex::ParseError& e) {
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(ex::parse("2*"), glasser::InputError);
}

TEST_CASE("evaluation examples") {
  CHECK(eval("i^2+1") == Complex{0.0, 0.0});
  CHECK(std::abs(eval("exp(i*pi)+1")) < 1e-15);
  CHECK(std::abs(eval("gamma(5)") - 24.0) < 1e-12);
  CHECK(std::abs(eval("zeta(2)") - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::abs(eval("sqrt(-4)") - Complex{0.0, 2.0}) < 1e-15);
  CHECK(std::abs(eval("log(-1)") - Complex{0.0, kPi}) < 1e-15);
  CHECK(std::abs(eval("e") - std::exp(1.0)) == 0.0);
  CHECK(std::abs(eval("sinh(1)^2 - cosh(1)^2") + 1.0) < 1e-14);
  CHECK(std::abs(eval("1/(k+b)", {{"k", 1.0}, {"b", 2.0}}) - 1.0 / 3.0) < 1e-16);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval("q+1"), glasser::InputError);
  CHECK_THROWS_AS(eval("1/0"), glasser::NumericError);
  CHECK_THROWS_AS(eval("1/(k-k)", {{"k", 2.0}}), glasser::NumericError);
  CHECK_THROWS_AS(eval("log(0)"), glasser::NumericError);
  CHECK_THROWS_AS(eval("gamma(0)"), glasser::NumericError);
  CHECK_THROWS_AS(eval("zeta(1)"), glasser::NumericError);
  CHECK_THROWS_AS(eval("exp(1000)"), glasser::NumericError);
}

TEST_CASE("free variables and imaginary unit") {
  const auto ast = ex::parse("gamma(4*a*k/pi^2 + b) + i");
  CHECK(ex::free_variables(*ast) == std::set<std::string>{"a", "b", "k"});
  CHECK(ex::uses_imaginary_unit(*ast));
  CHECK_FALSE(ex::uses_imaginary_unit(*ex::parse("exp(-k^2)")));
}

TEST_CASE("transform wrapping") {
  const auto f = ex::to_transform(ex::parse("1/(k+b)"), {{"b", 2.0}});
  CHECK(f.schwarz);
  CHECK(std::abs(f(1.0) - 1.0 / 3.0) < 1e-16);
  CHECK_FALSE(ex::to_transform(ex::parse("1/(k+b)"), {{"b", Complex{2.0, 1.0}}}).schwarz);
  CHECK_FALSE(ex::to_transform(ex::parse("1/(k+i)"), {}).schwarz);
  CHECK_THROWS_AS(ex::to_transform(ex::parse("1/(k+b)"), {}), glasser::InputError);
  const auto g = ex::to_transform(ex::parse("z^2"), {}, "z");
  CHECK(g(Complex{0.0, 1.0}) == Complex{-1.0, 0.0});
}

TEST_CASE("print then parse rebuilds the tree exactly") {
  TreeGen gen(101);
  for (int i = 0; i < 1000; ++i) {
    const auto tree = gen.tree(5, true);
    const std::string text = ex::print(*tree);
    const auto back = ex::parse(text);
    CHECK_MESSAGE(structurally_equal(*tree, *back), text);
    CHECK(ex::print(*back) == text);
  }
}

TEST_CASE("minimal parenthesization parses to the intended tree") {
  TreeGen gen(202);
  const ex::Bindings env{{"k", Complex{0.7, 0.3}}, {"b", 1.25}};
  for (int i = 0; i < 1000; ++i) {
    const auto tree = gen.tree(4, false);
    const std::string text = minimal(*tree);
    const auto back = ex::parse(text);
    CHECK_MESSAGE(structurally_equal(*tree, *back), text << " parsed as " << ex::print(*back));
    Complex want, got;
    bool want_threw = false, got_threw = false;
    try {
      want = ex::evaluate(*tree, env);
    } catch (const glasser::NumericError&) {
      want_threw = true;
    }
    try {
      got = ex::evaluate(*back, env);
    } catch (const glasser::NumericError&) {
      got_threw = true;
    }
    CHECK(want_threw == got_threw);
    if (!want_threw && !got_threw) CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
  }
}

TEST_CASE("evaluation is pure") {
  const auto ast = ex::parse("gamma(k) * zeta(k + 2) / sqrt(k)");
  const ex::Bindings env{{"k", Complex{1.5, 0.5}}};
  const Complex first = ex::evaluate(*ast, env);
  for (int i = 0; i < 10; ++i) CHECK(ex::evaluate(*ast, env) == first);
}
