#pragma once

#include <complex>
#include <numbers>

#include "glasser/error.hpp"

namespace glasser {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Branch convention used everywhere in the library: log is the principal
// branch with Im log z in (-pi, pi]; sqrt z = exp(log z / 2) and
// z^w = exp(w log z). A negative real number carrying a signed-zero imaginary
// part is treated as lying on the upper lip of the cut.
inline constexpr double kBranchCutImagMin = -kPi;  // exclusive
inline constexpr double kBranchCutImagMax = kPi;   // inclusive

// Gamma and zeta refuse to evaluate closer than this to a pole.
inline constexpr double kPoleGuard = 1e-8;

// Region where zeta is validated to 10 significant digits.
inline constexpr double kZetaValidatedImag = 50.0;

Complex principal_log(Complex z);
Complex principal_sqrt(Complex z);

/// exp(exponent * principal_log(base)). A zero base is accepted only for an
/// exponent with positive real part (result 0).
Complex cpow(Complex base, Complex exponent);

/// e^z - 1 without cancellation for small |z|.
Complex expm1(Complex z);

/// A logarithm of Gamma(z); exp() of it is Gamma(z). The imaginary part is
/// not reduced to the principal branch of log Gamma.
Complex log_gamma(Complex z);

/// Complex gamma function (Lanczos, g = 7, reflection for Re z < 1/2).
Complex gamma(Complex z);

/// 1/Gamma(z); entire, so it returns 0 (not a pole error) at the poles of
/// Gamma.
Complex rgamma(Complex z);

/// Riemann zeta. Dirichlet eta acceleration for Re z >= 1/2, functional
/// equation below.
Complex zeta(Complex z);

/// True when z lies in the region where zeta() meets its accuracy target
/// (Re z >= 0 and either |Im z| <= 50 or Re z >= 40).
bool zeta_validated(Complex z);

namespace detail {

/// Dirichlet eta by the Borwein alternating-series acceleration. Term count
/// is chosen from the error bound at z.
Complex dirichlet_eta(Complex z);

/// zeta(z) = eta(z) / (1 - 2^{1-z}); usable for any Re z > 0.
Complex zeta_from_eta(Complex z);

/// zeta(z) = 2^z pi^{z-1} sin(pi z / 2) Gamma(1-z) zeta(1-z); usable for
/// Re z < 1 away from the trivial zeros.
Complex zeta_functional_equation(Complex z);

}  // namespace detail
}  // namespace glasser
