#include "glasser/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <utility>

namespace glasser::expr {
namespace {

constexpr std::array<std::pair<std::string_view, Function>, 9> kFunctions = {{
    {"exp", Function::kExp},
    {"log", Function::kLog},
    {"sqrt", Function::kSqrt},
    {"sin", Function::kSin},
    {"cos", Function::kCos},
    {"sinh", Function::kSinh},
    {"cosh", Function::kCosh},
    {"gamma", Function::kGamma},
    {"zeta", Function::kZeta},
}};

constexpr std::array<std::pair<std::string_view, Constant>, 3> kConstants = {{
    {"pi", Constant::kPi},
    {"e", Constant::kE},
    {"i", Constant::kI},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::optional<Constant> lookup_constant(std::string_view name) {
  for (const auto& [n, c] : kConstants) {
    if (n == name) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- lexer

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret,
                 kLParen, kRParen, kComma, kEnd };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && is_digit(s[j])) {
          while (j < s.size() && is_digit(s[j])) ++j;
          i = j;
        }
      }
      Token t{Tok::kNumber, start, s.substr(start, i - start)};
      const char* first = s.data() + start;
      const char* last = s.data() + i;
      auto [ptr, ec] = std::from_chars(first, last, t.number);
      if (ec != std::errc() || ptr != last || !std::isfinite(t.number)) {
        throw ParseError(start, "malformed number '" + std::string(t.text) + "'");
      }
      out.push_back(t);
      continue;
    }
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, start, s.substr(start, i - start)});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      default:
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
    }
    ++i;
    out.push_back({kind, start, s.substr(start, 1)});
  }
  out.push_back({Tok::kEnd, s.size(), {}});
  return out;
}

// --------------------------------------------------------------- parser

constexpr int kUnaryMinusPower = 30;

struct InfixPower {
  BinaryOp op;
  int left;
  int right;
};

std::optional<InfixPower> infix_power(Tok t) {
  switch (t) {
    case Tok::kPlus: return InfixPower{BinaryOp::kAdd, 10, 11};
    case Tok::kMinus: return InfixPower{BinaryOp::kSub, 10, 11};
    case Tok::kStar: return InfixPower{BinaryOp::kMul, 20, 21};
    case Tok::kSlash: return InfixPower{BinaryOp::kDiv, 20, 21};
    case Tok::kCaret: return InfixPower{BinaryOp::kPow, 40, 40};
    default: return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr(0);
    if (peek().kind != Tok::kEnd) {
      throw ParseError(peek().offset, "expected operator or end of input, found " +
                                          describe(peek()));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      throw ParseError(peek().offset, "expected " + std::string(what) +
                                          ", found " + describe(peek()));
    }
    ++pos_;
  }

  ExprPtr parse_expr(int min_power) {
    ExprPtr lhs = parse_prefix();
    while (true) {
      const auto power = infix_power(peek().kind);
      if (!power || power->left < min_power) break;
      ++pos_;
      ExprPtr rhs = parse_expr(power->right);
      lhs = make_binary(power->op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_prefix() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNumber:
        return make_number(t.number);
      case Tok::kMinus:
        return make_negate(parse_expr(kUnaryMinusPower));
      case Tok::kLParen: {
        ExprPtr inner = parse_expr(0);
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        return parse_identifier(t);
      default:
        throw ParseError(t.offset, "expected expression, found " + describe(t));
    }
  }

  ExprPtr parse_identifier(const Token& t) {
    const bool is_call = peek().kind == Tok::kLParen;
    if (const auto f = lookup_function(t.text)) {
      if (!is_call) {
        throw ParseError(peek().offset, "expected '(' after function '" +
                                            std::string(t.text) + "'");
      }
      ++pos_;
      std::vector<ExprPtr> args;
      args.push_back(parse_expr(0));
      while (peek().kind == Tok::kComma) {
        const std::size_t comma = peek().offset;
        ++pos_;
        args.push_back(parse_expr(0));
        if (args.size() > 1) {
          throw ParseError(comma, "function '" + std::string(t.text) +
                                      "' takes exactly one argument");
        }
      }
      expect(Tok::kRParen, "')'");
      return make_call(*f, std::move(args.front()));
    }
    if (is_call) {
      throw ParseError(t.offset, "unknown function '" + std::string(t.text) + "'");
    }
    if (const auto c = lookup_constant(t.text)) return make_constant(*c);
    return make_variable(std::string(t.text));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ evaluator

void require_finite(Complex v, std::string_view what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericError(NumericError::Kind::kOverflow,
                       "non-finite value from " + std::string(what));
  }
}

Complex integer_power(Complex base, long long n) {
  if (n < 0) {
    if (base == Complex{0.0, 0.0}) {
      throw NumericError(NumericError::Kind::kDomain,
                         "zero raised to a negative power");
    }
    return 1.0 / integer_power(base, -n);
  }
  Complex result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex power(Complex base, Complex exponent) {
  const double e = exponent.real();
  if (exponent.imag() == 0.0 && e == std::round(e) && std::abs(e) <= 64.0) {
    return integer_power(base, static_cast<long long>(e));
  }
  return cpow(base, exponent);
}

Complex apply(Function f, Complex z) {
  switch (f) {
    case Function::kExp: return std::exp(z);
    case Function::kLog: return principal_log(z);
    case Function::kSqrt: return principal_sqrt(z);
    case Function::kSin: return std::sin(z);
    case Function::kCos: return std::cos(z);
    case Function::kSinh: return std::sinh(z);
    case Function::kCosh: return std::cosh(z);
    case Function::kGamma: return gamma(z);
    case Function::kZeta: return zeta(z);
  }
  return z;
}

struct Evaluator {
  const Bindings& bindings;

  Complex operator()(const Number& n) const { return {n.value, 0.0}; }

  Complex operator()(const ConstantRef& c) const {
    switch (c.which) {
      case Constant::kPi: return {kPi, 0.0};
      case Constant::kE: return {std::numbers::e, 0.0};
      case Constant::kI: return {0.0, 1.0};
    }
    return {};
  }

  Complex operator()(const Variable& v) const {
    auto it = bindings.find(v.name);
    if (it == bindings.end()) {
      throw InputError("unbound variable '" + v.name + "'");
    }
    return it->second;
  }

  Complex operator()(const Negate& n) const { return -eval(*n.child); }

  Complex operator()(const Binary& b) const {
    const Complex l = eval(*b.lhs);
    const Complex r = eval(*b.rhs);
    Complex out;
    switch (b.op) {
      case BinaryOp::kAdd: out = l + r; break;
      case BinaryOp::kSub: out = l - r; break;
      case BinaryOp::kMul: out = l * r; break;
      case BinaryOp::kDiv:
        if (r == Complex{0.0, 0.0}) {
          throw NumericError(NumericError::Kind::kDomain, "division by zero");
        }
        out = l / r;
        break;
      case BinaryOp::kPow: out = power(l, r); break;
    }
    require_finite(out, "arithmetic");
    return out;
  }

  Complex operator()(const Call& c) const {
    const Complex out = apply(c.function, eval(*c.args.front()));
    require_finite(out, name_of(c.function));
    return out;
  }

  Complex eval(const Expr& e) const { return std::visit(*this, e.node); }
};

// -------------------------------------------------------------- printer

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kPow: return "^";
  }
  return "?";
}

void print_to(const Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          std::array<char, 64> buf;
          auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
          out.append(buf.data(), end);
        } else if constexpr (std::is_same_v<T, ConstantRef>) {
          out += name_of(n.which);
        } else if constexpr (std::is_same_v<T, Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += "(-";
          print_to(*n.child, out);
          out += ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          out += "(";
          print_to(*n.lhs, out);
          out += op_symbol(n.op);
          print_to(*n.rhs, out);
          out += ")";
        } else {
          out += name_of(n.function);
          out += "(";
          print_to(*n.args.front(), out);
          out += ")";
        }
      },
      e.node);
}

template <typename Visit>
void walk(const Expr& e, Visit&& visit) {
  visit(e);
  if (const auto* n = std::get_if<Negate>(&e.node)) {
    walk(*n->child, visit);
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    walk(*b->lhs, visit);
    walk(*b->rhs, visit);
  } else if (const auto* c = std::get_if<Call>(&e.node)) {
    for (const ExprPtr& a : c->args) walk(*a, visit);
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, const std::string& message)
    : InputError("syntax error at offset " + std::to_string(offset) + ": " +
                 message),
      offset_(offset) {}

ExprPtr make_number(double value) {
  return std::make_shared<const Expr>(Expr{Number{value}});
}
ExprPtr make_constant(Constant c) {
  return std::make_shared<const Expr>(Expr{ConstantRef{c}});
}
ExprPtr make_variable(std::string name) {
  return std::make_shared<const Expr>(Expr{Variable{std::move(name)}});
}
ExprPtr make_negate(ExprPtr child) {
  return std::make_shared<const Expr>(Expr{Negate{std::move(child)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_call(Function f, ExprPtr arg) {
  std::vector<ExprPtr> args;
  args.push_back(std::move(arg));
  return std::make_shared<const Expr>(Expr{Call{f, std::move(args)}});
}

std::string_view name_of(Function f) {
  for (const auto& [n, fn] : kFunctions) {
    if (fn == f) return n;
  }
  return "?";
}

std::string_view name_of(Constant c) {
  for (const auto& [n, cc] : kConstants) {
    if (cc == c) return n;
  }
  return "?";
}

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

Complex evaluate(const Expr& ast, const Bindings& bindings) {
  return Evaluator{bindings}.eval(ast);
}

std::string print(const Expr& ast) {
  std::string out;
  print_to(ast, out);
  return out;
}

std::set<std::string> free_variables(const Expr& ast) {
  std::set<std::string> out;
  walk(ast, [&out](const Expr& e) {
    if (const auto* v = std::get_if<Variable>(&e.node)) out.insert(v->name);
  });
  return out;
}

bool uses_imaginary_unit(const Expr& ast) {
  bool found = false;
  walk(ast, [&found](const Expr& e) {
    if (const auto* c = std::get_if<ConstantRef>(&e.node)) {
      found = found || c->which == Constant::kI;
    }
  });
  return found;
}

TransformFunction to_transform(ExprPtr ast, Bindings bindings,
                               std::string variable) {
  for (const std::string& name : free_variables(*ast)) {
    if (name != variable && !bindings.contains(name)) {
      throw InputError("unbound variable '" + name + "' in F(" + variable + ")");
    }
  }
  bool real_bindings = true;
  for (const auto& [name, value] : bindings) {
    if (name != variable) real_bindings = real_bindings && value.imag() == 0.0;
  }
  TransformFunction f;
  f.schwarz = real_bindings && !uses_imaginary_unit(*ast);
  f.label = "custom";
  f.eval = [ast = std::move(ast), bindings = std::move(bindings),
            variable = std::move(variable)](Complex k) {
    Bindings local = bindings;
    local.insert_or_assign(variable, k);
    return evaluate(*ast, local);
  };
  return f;
}

}  // namespace glasser::expr
