#pragma once

#include <cstddef>
#include <functional>

#include "glasser/numerics.hpp"

namespace glasser {

/// Complex-valued integrand of a real variable. Must be pure.
using Integrand = std::function<Complex(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  // Budget of intervals per finite integration (per window on unbounded
  // domains).
  std::size_t max_subdivisions = 2000;
  // Half-width of the first window on unbounded domains.
  double initial_truncation = 8.0;
  double max_truncation = 120.0;
  double window_growth = 1.5;

  /// Throws InputError when the invariants (positive tolerances,
  /// L0 < Lmax, growth > 1) do not hold.
  void validate() const;
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  // Final window half-width; 0 for finite intervals.
  double truncation_used = 0.0;
  bool converged = false;
};

/// Adaptive 7/15-point Gauss-Kronrod with global bisection of the interval
/// carrying the largest error. Throws QuadratureError(kNonFinite) with the
/// offending abscissa if the integrand returns NaN/inf. Non-convergence is
/// reported through `converged`, not thrown.
QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const QuadratureOptions& opts = {});

/// Integral over [0, inf) by geometrically growing windows [0, L]. Throws
/// QuadratureError(kDivergence) when the window contributions fail to
/// decrease twice in a row.
QuadratureResult integrate_half_line(const Integrand& f,
                                     const QuadratureOptions& opts = {});

/// Integral over (-inf, inf) by symmetric windows [-L, L].
QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureOptions& opts = {});

}  // namespace glasser
