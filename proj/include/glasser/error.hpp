#pragma once

#include <stdexcept>
#include <string>

namespace glasser {

/// Failure of a special function or elementary complex operation.
class NumericError : public std::runtime_error {
 public:
  enum class Kind { kDomain, kPole, kOverflow };

  NumericError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Failure of an integration routine.
class QuadratureError : public std::runtime_error {
 public:
  enum class Kind { kNonConvergence, kNonFinite, kDivergence };

  QuadratureError(Kind kind, const std::string& what, double abscissa = 0.0)
      : std::runtime_error(what), kind_(kind), abscissa_(abscissa) {}

  Kind kind() const noexcept { return kind_; }
  // Point where the integrand went non-finite (kNonFinite), or the window
  // half-width reached (kDivergence / kNonConvergence on unbounded domains).
  double abscissa() const noexcept { return abscissa_; }

 private:
  Kind kind_;
  double abscissa_;
};

/// Bad user input: unknown case, parameter outside its constraint, malformed
/// literal. Maps to a usage error at the CLI.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace glasser
