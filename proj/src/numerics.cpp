#include "glasser/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace glasser {
namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kLn2 = std::numbers::ln2;
// log(DBL_MAX)
constexpr double kMaxLog = 709.782712893384;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i)";
  return os.str();
}

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Lanczos sum in log form, Re z >= 1/2.
Complex log_gamma_lanczos(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) that stays finite for large |Im z|.
Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < 15.0) {
    return principal_log(std::sin(kPi * z));
  }
  if (z.imag() < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  // sin w = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| tiny for Im w > 0.
  const Complex w = kPi * z;
  const Complex i{0.0, 1.0};
  return -i * w + std::log(i * 0.5 * (1.0 - std::exp(2.0 * i * w)));
}

// Distance to the nearest non-positive integer, or infinity if Re z > 1/2.
double distance_to_gamma_pole(Complex z) {
  if (z.real() > 0.5) return INFINITY;
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - n);
}

// Term count for the Borwein eta sum: error bound
// 3 (1 + 2|t|) e^{pi |t| / 2} / (|Gamma(s)| (3 + sqrt 8)^n) below ~1e-18.
int borwein_terms(Complex s) {
  const double t = std::abs(s.imag());
  const double log_abs_gamma = log_gamma(s).real();
  const double budget = std::log(3.0) + std::log1p(2.0 * t) +
                        kPi * t / 2.0 - log_abs_gamma + 41.5;
  const double per_term = std::log(3.0 + std::sqrt(8.0));
  const int n = static_cast<int>(std::ceil(budget / per_term));
  return std::clamp(n, 20, 300);
}

}  // namespace

Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw NumericError(NumericError::Kind::kDomain, "log of zero");
  }
  // -0.0 + 0.0 == +0.0: puts the negative real axis on the upper lip.
  return std::log(Complex{z.real(), z.imag() + 0.0});
}

Complex principal_sqrt(Complex z) {
  return std::sqrt(Complex{z.real(), z.imag() + 0.0});
}

Complex cpow(Complex base, Complex exponent) {
  if (base == Complex{0.0, 0.0}) {
    if (exponent.real() > 0.0) return {0.0, 0.0};
    throw NumericError(NumericError::Kind::kDomain,
                       "zero raised to exponent with non-positive real part " +
                           describe(exponent));
  }
  const Complex r = std::exp(exponent * principal_log(base));
  if (!is_finite(r)) {
    throw NumericError(NumericError::Kind::kOverflow,
                       "power overflow: " + describe(base) + "^" +
                           describe(exponent));
  }
  return r;
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double em1 = std::expm1(x);
  const double half_sin = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  return {em1 * std::cos(y) - 2.0 * half_sin * half_sin,
          std::exp(x) * std::sin(y)};
}

Complex log_gamma(Complex z) {
  if (distance_to_gamma_pole(z) < kPoleGuard) {
    throw NumericError(NumericError::Kind::kPole,
                       "gamma pole at " + describe(z));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
  }
  return log_gamma_lanczos(z);
}

Complex gamma(Complex z) {
  if (distance_to_gamma_pole(z) < kPoleGuard) {
    throw NumericError(NumericError::Kind::kPole,
                       "gamma pole at " + describe(z));
  }
  if (z.real() < 0.5) {
    // Direct reflection keeps full accuracy near the poles.
    const Complex s = std::sin(kPi * z);
    const Complex g = std::exp(log_gamma_lanczos(1.0 - z));
    const Complex r = kPi / (s * g);
    if (!is_finite(r)) {
      throw NumericError(NumericError::Kind::kOverflow,
                         "gamma overflow at " + describe(z));
    }
    return r;
  }
  const Complex lg = log_gamma_lanczos(z);
  if (lg.real() > kMaxLog) {
    throw NumericError(NumericError::Kind::kOverflow,
                       "gamma overflow at " + describe(z));
  }
  return std::exp(lg);
}

Complex rgamma(Complex z) {
  if (distance_to_gamma_pole(z) < kPoleGuard) {
    // 1/Gamma has simple zeros there; linearize.
    const double n = std::round(z.real());
    const double m = -n;
    // residue of Gamma at -m is (-1)^m / m!
    const double sign = (static_cast<long long>(m) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::tgamma(m + 1.0) * (z - n);
  }
  const Complex lg = log_gamma(z);
  if (-lg.real() > kMaxLog) {
    throw NumericError(NumericError::Kind::kOverflow,
                       "1/gamma overflow at " + describe(z));
  }
  return std::exp(-lg);
}

namespace detail {

Complex dirichlet_eta(Complex s) {
  const int n = borwein_terms(s);
  // d_k = sum_{i<=k} term_i, term_i = n (n+i-1)! 4^i / ((n-i)! (2i)!).
  std::vector<double> term(static_cast<std::size_t>(n) + 1);
  term[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    term[i + 1] = term[i] * 4.0 * (n + i) * (n - i) /
                  ((2.0 * i + 1.0) * (2.0 * i + 2.0));
  }
  // tail[k] = d_n - d_k, summed from the top to avoid cancellation.
  std::vector<double> tail(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] + term[k + 1];
  const double d_n = tail[0] + term[0];

  Complex sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double weight = tail[k] / d_n;
    const Complex power = std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0 ? weight : -weight) * power;
  }
  return sum;
}

Complex zeta_from_eta(Complex z) {
  if (std::abs(z - 1.0) < kPoleGuard) {
    throw NumericError(NumericError::Kind::kPole,
                       "zeta pole at " + describe(z));
  }
  // 1 - 2^{1-z} = -expm1((1-z) ln 2)
  const Complex denom = -expm1((1.0 - z) * kLn2);
  return dirichlet_eta(z) / denom;
}

Complex zeta_functional_equation(Complex z) {
  const Complex w = 1.0 - z;
  // sin(pi z/2) zeta(1-z) = eta(1-z) * [sin(pi z/2) / (1 - 2^z)]; the bracket
  // is regular at z = 0 where it equals -(pi/2)/ln 2.
  Complex ratio;
  if (z == Complex{0.0, 0.0}) {
    ratio = -(kPi / 2.0) / kLn2;
  } else {
    ratio = std::sin(kPi * z / 2.0) / (-expm1(z * kLn2));
  }
  const Complex log_prefactor =
      z * kLn2 + (z - 1.0) * std::log(kPi) + log_gamma(w);
  return std::exp(log_prefactor) * ratio * dirichlet_eta(w);
}

}  // namespace detail

Complex zeta(Complex z) {
  if (std::abs(z - 1.0) < kPoleGuard) {
    throw NumericError(NumericError::Kind::kPole,
                       "zeta pole at " + describe(z));
  }
  Complex r;
  if (z.real() >= 0.5) {
    r = detail::zeta_from_eta(z);
  } else {
    // Trivial zeros at negative even integers: sin(pi z / 2) vanishes there,
    // which the product handles exactly.
    r = detail::zeta_functional_equation(z);
  }
  if (!is_finite(r)) {
    throw NumericError(NumericError::Kind::kOverflow,
                       "zeta overflow at " + describe(z));
  }
  return r;
}

bool zeta_validated(Complex z) {
  // Far right the series is dominated by its first terms at any height.
  return z.real() >= 0.0 &&
         (std::abs(z.imag()) <= kZetaValidatedImag || z.real() >= 40.0);
}

}  // namespace glasser
