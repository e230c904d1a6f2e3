#pragma once

// Reference implementations used only by tests. They share no code with the
// library paths they check.

#include <cmath>
#include <complex>
#include <numbers>

namespace glasser::testing {

using Cx = std::complex<double>;

/// log Gamma by upward recurrence to |z| >= 20 followed by the Stirling
/// series (error below 1e-16 there). Requires Re z > 0.
inline Cx stirling_log_gamma(Cx z) {
  Cx shift{0.0, 0.0};
  while (std::abs(z) < 20.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Cx inv = 1.0 / z;
  const Cx inv2 = inv * inv;
  const Cx series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 +
                             inv2 * (-1.0 / 1680.0 +
                                     inv2 * (1.0 / 1188.0 +
                                             inv2 * (-691.0 / 360360.0 +
                                                      inv2 * (1.0 / 156.0)))))));
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) +
         series - shift;
}

/// Gamma via Stirling for Re z >= 1/2, reflection otherwise.
inline Cx stirling_gamma(Cx z) {
  if (z.real() >= 0.5) return std::exp(stirling_log_gamma(z));
  const double pi = std::numbers::pi;
  return pi / (std::sin(pi * z) * std::exp(stirling_log_gamma(1.0 - z)));
}

/// zeta(z) for Re z > 1 from the Dirichlet series summed to N terms plus the
/// Euler-Maclaurin tail N^{1-z}/(z-1) - N^{-z}/2 + z N^{-z-1}/12
/// - z(z+1)(z+2) N^{-z-3}/720. The neglected remainder is bounded by
/// |z(z+1)(z+2)(z+3)(z+4)| N^{-Re z - 5} / 30240.
inline Cx dirichlet_zeta(Cx z, int terms = 4000) {
  Cx sum{0.0, 0.0};
  for (int n = terms - 1; n >= 1; --n) {
    sum += std::exp(-z * std::log(static_cast<double>(n)));
  }
  const double big_n = terms;
  const Cx p = std::exp(-z * std::log(big_n));  // N^{-z}
  const Cx tail = big_n * p / (z - 1.0) + 0.5 * p + z * p / (12.0 * big_n) -
                  z * (z + 1.0) * (z + 2.0) * p / (720.0 * big_n * big_n * big_n);
  return sum + tail;
}

inline double dirichlet_zeta_remainder_bound(Cx z, int terms = 4000) {
  const double n = terms;
  return std::abs(z * (z + 1.0) * (z + 2.0) * (z + 3.0) * (z + 4.0)) *
         std::pow(n, -z.real() - 5.0) / 30240.0;
}

}  // namespace glasser::testing
