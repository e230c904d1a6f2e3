#include "glasser/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace glasser {
namespace {

constexpr double kPi2 = kPi * kPi;

// Ordinates of the first nontrivial zeta zeros 1/2 + i gamma.
constexpr std::array<double, 10> kZetaZeroOrdinates = {
    14.134725141734693, 21.022039638771555, 25.010857580145688,
    30.424876125859513, 32.935061587739189, 37.586178158825671,
    40.918719012147495, 43.327073280914999, 48.005150881167159,
    49.773832477672302};

constexpr double kZetaZeroWarnDistance = 0.05;

Complex param(const ParamMap& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw InputError("missing parameter " + std::string(name));
  return it->second;
}

double real_param(const ParamMap& p, std::string_view name) {
  const Complex v = param(p, name);
  if (v.imag() != 0.0) {
    throw InputError("parameter " + std::string(name) + " must be real");
  }
  return v.real();
}

void require_positive(const ParamMap& p, std::string_view name) {
  if (!(real_param(p, name) > 0.0)) {
    throw InputError("parameter " + std::string(name) + " must be > 0");
  }
}

KernelParams kernel_of(const ParamMap& p) {
  KernelParams k{param(p, "a")};
  k.validate();
  return k;
}

bool complex_a(const ParamMap& p) { return kernel_of(p).experimental(); }

std::string fmt(double v, int digits = 9) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

// ln cosh y without overflow.
double log_cosh(double y) {
  const double ay = std::abs(y);
  return ay + std::log1p(std::exp(-2.0 * ay)) - std::numbers::ln2;
}

CaseDefinition make_rational() {
  CaseDefinition c;
  c.id = "rational";
  c.formula =
      "Int_0^inf (x^2+b) cosh x / [(x^4+(2b+pi^2)x^2+b^2)(1+2a^2 cosh 2x+a^4)] dx"
      " = pi / [4a(1+a^2)(b+pi^2/4+ln^2 a)]";
  c.params = {{"a", "a != 0 (real a > 0 proven)", {0.7, 0.0}},
              {"b", "real b > 0", {2.0, 0.0}}};
  c.domain = Domain::kHalfLine;
  c.published_check = PublishedCheck{{{"a", {0.7, 0.0}}, {"b", {2.0, 0.0}}},
                             {0.163891, 0.0},
                             5e-7};
  c.notes = "F(k) = 1/(k+b), the Laplace image of e^{-bt}. b = 0 is excluded: "
            "the b -> 0 limit of the integral differs from its value at 0.";
  c.validate = [](const ParamMap& p) {
    kernel_of(p);
    require_positive(p, "b");
  };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions&) -> Integrand {
    const KernelParams k = kernel_of(p);
    const double b = real_param(p, "b");
    return [k, b](double x) {
      const double x2 = x * x;
      const double rational = (x2 + b) / (x2 * x2 + (2.0 * b + kPi2) * x2 + b * b);
      return rational * kernel_weight(k, x);
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) {
    const KernelParams k = kernel_of(p);
    const Complex a = k.a;
    const double b = real_param(p, "b");
    return kPi / (4.0 * a * (1.0 + a * a) * (b + master_point(k)));
  };
  c.experimental = complex_a;
  return c;
}

CaseDefinition make_bessel() {
  CaseDefinition c;
  c.id = "bessel";
  c.formula =
      "Int_{-inf}^{inf} cosh x / (1+2a^2 cosh 2x+a^4) dx / sqrt(1+(x^2+i pi x)^2)"
      " = pi / [2a(1+a^2) sqrt(1+(pi^2/4+ln^2 a)^2)]";
  c.params = {{"a", "a != 0 (real a > 0 proven)", {7.0, 0.0}}};
  c.domain = Domain::kRealLine;
  c.published_check = PublishedCheck{{{"a", {7.0, 0.0}}}, {0.000708622, 0.0}, 5e-9};
  c.notes = "F(k) = 1/sqrt(1+k^2), the Laplace image of J_0(t). The printed "
            "check value 0.000708622 is reproduced at a = 7, not at the "
            "printed a = 0.7.";
  c.validate = [](const ParamMap& p) { kernel_of(p); };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions&) -> Integrand {
    const KernelParams k = kernel_of(p);
    return [k](double x) {
      const Complex kk{x * x, kPi * x};
      return kernel_weight(k, x) / principal_sqrt(1.0 + kk * kk);
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) {
    const KernelParams k = kernel_of(p);
    const Complex a = k.a;
    const Complex m = master_point(k);
    return kPi / (2.0 * a * (1.0 + a * a) * principal_sqrt(1.0 + m * m));
  };
  c.experimental = complex_a;
  c.remarks = [rhs = c.rhs_closed_form](const ParamMap&) {
    const Complex at_printed = rhs({{"a", {0.7, 0.0}}});
    const Complex at_seven = rhs({{"a", {7.0, 0.0}}});
    return std::vector<std::string>{
        "closed form at a = 0.7 is " + fmt(at_printed.real()) +
        " and at a = 7 is " + fmt(at_seven.real()) +
        "; the printed check value 0.000708622 belongs to a = 7"};
  };
  return c;
}

CaseDefinition make_gaussian() {
  CaseDefinition c;
  c.id = "gaussian";
  c.formula =
      "Int_0^inf e^{-b x^2 (x^2 - pi^2)} cos(2 b pi x^3) cosh x / "
      "(1+2a^2 cosh 2x+a^4) dx = e^{-b(pi^2/4+ln^2 a)^2} pi / [4a(1+a^2)]";
  c.params = {{"a", "a != 0 (real a > 0 proven)", {0.3, 0.0}},
              {"b", "real b > 0", {0.3, 0.0}}};
  c.domain = Domain::kHalfLine;
  c.published_check = PublishedCheck{{{"a", {0.3, 0.0}}, {"b", {0.3, 0.0}}},
                             {0.0240764, 0.0},
                             5e-8};
  c.notes = "F(k) = e^{-b k^2}.";
  c.validate = [](const ParamMap& p) {
    kernel_of(p);
    require_positive(p, "b");
  };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions&) -> Integrand {
    const KernelParams k = kernel_of(p);
    const double b = real_param(p, "b");
    return [k, b](double x) {
      const double x2 = x * x;
      return std::exp(-b * x2 * (x2 - kPi2)) * std::cos(2.0 * b * kPi * x2 * x) *
             kernel_weight(k, x);
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) {
    const KernelParams k = kernel_of(p);
    const Complex a = k.a;
    const double b = real_param(p, "b");
    const Complex m = master_point(k);
    return std::exp(-b * m * m) * kPi / (4.0 * a * (1.0 + a * a));
  };
  c.experimental = complex_a;
  return c;
}

CaseDefinition make_cosine() {
  CaseDefinition c;
  c.id = "cosine";
  c.formula =
      "Int_0^inf cos(alpha x^2) cosh(alpha pi x) cosh x / (1+2a^2 cosh 2x+a^4) dx"
      " = pi cos[alpha(pi^2/4+ln^2 a)] / [4a(1+a^2)]";
  c.params = {{"alpha", "real, |alpha| pi <= 1 (larger values diverge)", {0.1, 0.0}},
              {"a", "a != 0 (complex a experimental)", {1.0, 2.0}}};
  c.domain = Domain::kHalfLine;
  c.published_check = PublishedCheck{{{"alpha", {0.1, 0.0}}, {"a", {1.0, 2.0}}},
                             {-0.0783703, 0.00264214},
                             5e-8};
  c.notes = "F(k) = cos(alpha k), the Laplace image of a distribution. For "
            "|alpha| pi > 1 the integrand grows like e^{(|alpha| pi - 1)x} and "
            "the quadrature reports divergence.";
  c.validate = [](const ParamMap& p) {
    kernel_of(p);
    real_param(p, "alpha");
  };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions&) -> Integrand {
    const KernelParams k = kernel_of(p);
    const double alpha = real_param(p, "alpha");
    return [k, alpha](double x) {
      return std::cos(alpha * x * x) * std::cosh(alpha * kPi * x) *
             kernel_weight(k, x);
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) {
    const KernelParams k = kernel_of(p);
    const Complex a = k.a;
    const double alpha = real_param(p, "alpha");
    return kPi * std::cos(alpha * master_point(k)) / (4.0 * a * (1.0 + a * a));
  };
  c.experimental = complex_a;
  return c;
}

CaseDefinition make_gamma() {
  CaseDefinition c;
  c.id = "gamma";
  c.formula = "Int_{-inf}^{inf} dx / [cosh(pi x) Gamma(4a x(x+i) + b)] = 1/Gamma(a+b)";
  c.params = {{"a", "real", {0.5, 0.0}}, {"b", "real", {1.0, 0.0}}};
  c.domain = Domain::kRealLine;
  c.notes = "The a = 1 sech form with F(k) = 1/Gamma(4ak/pi^2 + b), rescaled "
            "by x -> pi x.";
  c.validate = [](const ParamMap& p) {
    real_param(p, "a");
    real_param(p, "b");
  };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions&) -> Integrand {
    const double a = real_param(p, "a");
    const double b = real_param(p, "b");
    return [a, b](double x) {
      const Complex z{4.0 * a * x * x + b, 4.0 * a * x};
      return rgamma(z) * std::exp(-log_cosh(kPi * x));
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) {
    return rgamma(Complex{real_param(p, "a") + real_param(p, "b"), 0.0});
  };
  c.experimental = [](const ParamMap& p) { return !(real_param(p, "a") > 0.0); };
  return c;
}

struct ZetaParams {
  int n;
  double x;
  double a;
};

ZetaParams zeta_params(const ParamMap& p) {
  const double n = real_param(p, "n");
  if (n != std::round(n) || n < 0.0 || n > 4.0) {
    throw InputError("parameter n must be an integer in 0..4");
  }
  const double x = real_param(p, "x");
  if (!(x > 0.0 && x < 1.0)) throw InputError("parameter x must lie in (0, 1)");
  require_positive(p, "a");
  return {static_cast<int>(n), x, real_param(p, "a")};
}

// |t| beyond which x^{t^2}/cosh(pi t) stays below `cutoff`.
double zeta_contour_extent(double x, double cutoff) {
  double t = 0.0;
  while (t * t * std::log(x) - log_cosh(kPi * t) >= std::log(cutoff)) t += 0.125;
  return t;
}

CaseDefinition make_zeta() {
  CaseDefinition c;
  c.id = "zeta";
  c.formula =
      "Int_{-i inf}^{i inf} x^{s(1-s)} / [cos(pi s) zeta^n(4a s(1-s))] ds/(2 pi i)"
      " = x^{1/4} / [2 pi zeta^n(a)]";
  c.params = {{"n", "integer 0..4", {2.0, 0.0}},
              {"x", "real, 0 < x < 1", {0.5, 0.0}},
              {"a", "real a > 0", {2.0, 0.0}}};
  c.domain = Domain::kImaginaryAxis;
  c.notes = "Integrated along s = i t. At a = 1 with n >= 1 the right side is "
            "the limit 0 (1/zeta has a zero at 1).";
  c.validate = [](const ParamMap& p) { zeta_params(p); };
  c.lhs_integrand = [](const ParamMap& p, const QuadratureOptions& opts) -> Integrand {
    const ZetaParams zp = zeta_params(p);
    const double log_x = std::log(zp.x);
    const double log_cutoff = std::log(opts.abs_tol * 1e-2);
    return [zp, log_x, log_cutoff](double t) -> Complex {
      const double log_envelope = t * t * log_x - log_cosh(kPi * t);
      if (log_envelope < log_cutoff) return {0.0, 0.0};
      Complex value = std::exp(Complex{log_envelope, t * log_x}) / (2.0 * kPi);
      if (zp.n > 0) {
        const Complex w = 4.0 * zp.a * Complex{t * t, t};
        // w = 0 at t = 0, where zeta(0) = -1/2.
        const Complex z = zeta(w);
        Complex zn = z;
        for (int i = 1; i < zp.n; ++i) zn *= z;
        value /= zn;
      }
      return value;
    };
  };
  c.rhs_closed_form = [](const ParamMap& p) -> Complex {
    const ZetaParams zp = zeta_params(p);
    const double numerator = std::pow(zp.x, 0.25) / (2.0 * kPi);
    if (zp.n == 0) return numerator;
    if (std::abs(zp.a - 1.0) < kPoleGuard) return 0.0;
    return numerator / std::pow(zeta(Complex{zp.a, 0.0}), zp.n);
  };
  c.experimental = [](const ParamMap&) { return false; };
  c.remarks = [](const ParamMap& p) {
    std::vector<std::string> out;
    const ZetaParams zp = zeta_params(p);
    if (zp.n == 0) return out;
    const double t_max = zeta_contour_extent(zp.x, 1e-16);
    const double d = zeta_contour_zero_distance(zp.a, t_max);
    if (d < kZetaZeroWarnDistance) {
      out.push_back("warning: contour 4a(t^2+it) passes within " + fmt(d, 3) +
                    " of a zeta zero; the quotient by zeta^n is ill-conditioned");
    }
    for (int i = 0; i <= 400; ++i) {
      const double t = t_max * i / 400.0;
      const Complex w = 4.0 * zp.a * Complex{t * t, t};
      if (!zeta_validated(w)) {
        out.push_back("warning: contour reaches w = " + fmt(w.real(), 4) +
                      " + " + fmt(w.imag(), 4) +
                      "i, outside the validated zeta region");
        break;
      }
    }
    return out;
  };
  return c;
}

std::vector<CaseDefinition> build_catalog() {
  return {make_rational(), make_bessel(), make_gaussian(),
          make_cosine(),   make_gamma(),  make_zeta()};
}

}  // namespace

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::kHalfLine:
      return "half-line";
    case Domain::kRealLine:
      return "real-line";
    case Domain::kImaginaryAxis:
      return "imaginary-axis";
  }
  return "unknown";
}

ParamMap CaseDefinition::default_params() const {
  ParamMap out;
  for (const ParamSpec& s : params) out.emplace(s.name, s.default_value);
  return out;
}

const std::vector<CaseDefinition>& list_cases() {
  static const std::vector<CaseDefinition> cases = build_catalog();
  return cases;
}

const CaseDefinition& find_case(std::string_view id) {
  for (const CaseDefinition& c : list_cases()) {
    if (c.id == id) return c;
  }
  throw InputError("unknown case '" + std::string(id) + "'");
}

ParamMap resolve_params(const CaseDefinition& def, const ParamMap& overrides) {
  ParamMap out = def.default_params();
  for (const auto& [name, value] : overrides) {
    auto it = out.find(name);
    if (it == out.end()) {
      throw InputError("case '" + def.id + "' has no parameter '" + name + "'");
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw InputError("parameter '" + name + "' must be finite");
    }
    it->second = value;
  }
  return out;
}

VerificationReport run_case(std::string_view id, const ParamMap& params,
                            const QuadratureOptions& opts, double tolerance) {
  const CaseDefinition& def = find_case(id);
  const ParamMap resolved = resolve_params(def, params);
  def.validate(resolved);
  opts.validate();

  VerificationReport report;
  report.case_name = def.id;
  for (const ParamSpec& s : def.params) {
    report.params.emplace_back(s.name, resolved.at(s.name));
  }
  report.tolerance = tolerance;
  report.experimental = def.experimental(resolved);

  const Integrand f = def.lhs_integrand(resolved, opts);
  report.diagnostics = def.domain == Domain::kHalfLine
                           ? integrate_half_line(f, opts)
                           : integrate_real_line(f, opts);
  require_converged(report.diagnostics, "left side");
  report.lhs = report.diagnostics.value;
  report.rhs = def.rhs_closed_form(resolved);
  finalize_report(report);

  if (report.experimental) {
    report.notes.push_back("parameters outside the proven range (experimental)");
  }
  if (def.published_check && def.published_check->params == resolved) {
    const Complex expected = def.published_check->expected;
    report.notes.push_back(
        "printed value " + fmt(expected.real(), 9) +
        (expected.imag() != 0.0 ? (expected.imag() < 0 ? " - " : " + ") +
                                      fmt(std::abs(expected.imag()), 9) + "i"
                                : std::string()) +
        ": |lhs - printed| = " + fmt(std::abs(report.lhs - expected), 3) +
        ", |rhs - printed| = " + fmt(std::abs(report.rhs - expected), 3));
  }
  if (def.remarks) {
    for (std::string& r : def.remarks(resolved)) report.notes.push_back(std::move(r));
  }
  return report;
}

double zeta_contour_zero_distance(double a, double t_max) {
  const int steps = 2000;
  const double h = t_max / steps;
  double best = INFINITY;
  for (double gamma_n : kZetaZeroOrdinates) {
    for (double im : {gamma_n, -gamma_n}) {
      const Complex zero{0.5, im};
      const auto dist = [&](double t) {
        return std::abs(4.0 * a * Complex{t * t, t} - zero);
      };
      int nearest = -steps;
      for (int i = -steps; i <= steps; ++i) {
        if (dist(i * h) < dist(nearest * h)) nearest = i;
      }
      // The distance is unimodal within one sample of the coarse minimum.
      double lo = std::max(-t_max, (nearest - 1) * h);
      double hi = std::min(t_max, (nearest + 1) * h);
      for (int it = 0; it < 100; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (dist(m1) < dist(m2)) {
          hi = m2;
        } else {
          lo = m1;
        }
      }
      best = std::min(best, dist(0.5 * (lo + hi)));
    }
  }
  return best;
}

}  // namespace glasser
