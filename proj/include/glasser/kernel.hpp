#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "glasser/numerics.hpp"
#include "glasser/quadrature.hpp"

namespace glasser {

inline constexpr double kDefaultTolerance = 1e-8;
// Keeps rel_diff defined when the right side vanishes.
inline constexpr double kRelDiffFloor = 1e-300;

/// Parameter of the weight cosh x / (1 + 2a^2 cosh 2x + a^4). Real a > 0 is
/// the proven setting; any other non-zero a is accepted as experimental.
struct KernelParams {
  Complex a{1.0, 0.0};

  bool experimental() const { return a.imag() != 0.0 || !(a.real() > 0.0); }
  /// Throws InputError for a = 0 or non-finite a.
  void validate() const;
};

/// The Laplace image F(k) of some f(t). `schwarz` records whether
/// F(conj k) = conj F(k), which makes the real-line integrals real.
struct TransformFunction {
  std::function<Complex(Complex)> eval;
  bool schwarz = true;
  std::string label;

  Complex operator()(Complex k) const { return eval(k); }
};

struct VerificationReport {
  std::string case_name;
  std::vector<std::pair<std::string, Complex>> params;
  Complex lhs;
  Complex rhs;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
  bool experimental = false;
  QuadratureResult diagnostics;
  std::vector<std::string> notes;
};

/// Fills abs_diff, rel_diff and pass from lhs, rhs and tolerance.
void finalize_report(VerificationReport& report);

/// cosh x / (1 + 2a^2 cosh 2x + a^4), evaluated through the factored form
/// (a^2 + e^{2x})(a^2 + e^{-2x}) scaled by e^{-2|x|} so it cannot overflow.
Complex kernel_weight(const KernelParams& params, double x);

/// pi^2/4 + (ln a)^2, the point where F is sampled on the right side.
Complex master_point(const KernelParams& params);

/// Closed form of the seed integral:
/// pi e^{-t[pi^2/4 + (ln a)^2]} / (4a(1+a^2)).
Complex ramanujan_rhs(const KernelParams& params, double t);

/// Int_0^inf e^{-t x^2} cos(t pi x) kernel_weight(a, x) dx.
/// Throws QuadratureError(kNonConvergence) if the tolerance is not met.
QuadratureResult ramanujan_lhs(const KernelParams& params, double t,
                               const QuadratureOptions& opts = {});

/// pi F(pi^2/4 + ln^2 a) / (2a(1+a^2)).
Complex master_rhs(const TransformFunction& transform,
                   const KernelParams& params);

/// Int_{-inf}^{inf} F(x^2 + i pi x) kernel_weight(a, x) dx.
QuadratureResult master_lhs(const TransformFunction& transform,
                            const KernelParams& params,
                            const QuadratureOptions& opts = {});

/// Compares both sides of the master formula. At a = 1 this is the sech
/// form: (1/4) Int F(x^2 + i pi x) sech x dx = pi F(pi^2/4) / 4.
VerificationReport verify_master(const TransformFunction& transform,
                                 const KernelParams& params,
                                 const QuadratureOptions& opts = {},
                                 double tolerance = kDefaultTolerance);

/// Compares both sides of the seed integral at (a, t).
VerificationReport verify_ramanujan(const KernelParams& params, double t,
                                    const QuadratureOptions& opts = {},
                                    double tolerance = kDefaultTolerance);

/// Throws QuadratureError(kNonConvergence) unless result.converged.
void require_converged(const QuadratureResult& result, const std::string& what);

}  // namespace glasser
