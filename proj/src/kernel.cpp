#include "glasser/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace glasser {
namespace {

Complex normalization(const KernelParams& params) {
  const Complex a = params.a;
  const Complex n = a * (1.0 + a * a);
  if (n == Complex{0.0, 0.0}) {
    throw NumericError(NumericError::Kind::kDomain, "a(1 + a^2) vanishes");
  }
  return n;
}

}  // namespace

void KernelParams::validate() const {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw InputError("kernel parameter a must be finite");
  }
  if (a == Complex{0.0, 0.0}) {
    throw InputError("kernel parameter a must be non-zero");
  }
}

void finalize_report(VerificationReport& report) {
  report.abs_diff = std::abs(report.lhs - report.rhs);
  report.rel_diff =
      report.abs_diff / std::max(std::abs(report.rhs), kRelDiffFloor);
  report.pass = report.rel_diff < report.tolerance ||
                report.abs_diff < report.tolerance;
}

Complex kernel_weight(const KernelParams& params, double x) {
  const Complex a2 = params.a * params.a;
  const double ax = std::abs(x);
  const double u = std::exp(-2.0 * ax);
  // cosh x = e^{|x|}(1+u)/2 and the denominator is e^{2|x|}(1 + a^2 u)(a^2 + u).
  const Complex denom = 2.0 * (1.0 + a2 * u) * (a2 + u);
  if (denom == Complex{0.0, 0.0}) {
    std::ostringstream os;
    os << "kernel denominator vanishes at x = " << x;
    throw NumericError(NumericError::Kind::kDomain, os.str());
  }
  return std::exp(-ax) * (1.0 + u) / denom;
}

Complex master_point(const KernelParams& params) {
  const Complex log_a = principal_log(params.a);
  return kPi * kPi / 4.0 + log_a * log_a;
}

Complex ramanujan_rhs(const KernelParams& params, double t) {
  if (!(t > 0.0)) throw InputError("seed integral needs t > 0");
  return kPi * std::exp(-t * master_point(params)) /
         (4.0 * normalization(params));
}

QuadratureResult ramanujan_lhs(const KernelParams& params, double t,
                               const QuadratureOptions& opts) {
  if (!(t > 0.0)) throw InputError("seed integral needs t > 0");
  params.validate();
  const Integrand f = [params, t](double x) {
    return std::exp(-t * x * x) * std::cos(t * kPi * x) *
           kernel_weight(params, x);
  };
  QuadratureResult r = integrate_half_line(f, opts);
  require_converged(r, "seed integral");
  return r;
}

Complex master_rhs(const TransformFunction& transform,
                   const KernelParams& params) {
  return kPi * transform(master_point(params)) /
         (2.0 * normalization(params));
}

QuadratureResult master_lhs(const TransformFunction& transform,
                            const KernelParams& params,
                            const QuadratureOptions& opts) {
  params.validate();
  const Integrand f = [&transform, params](double x) {
    return transform(Complex{x * x, kPi * x}) * kernel_weight(params, x);
  };
  QuadratureResult r = integrate_real_line(f, opts);
  require_converged(r, "master integral");
  return r;
}

VerificationReport verify_master(const TransformFunction& transform,
                                 const KernelParams& params,
                                 const QuadratureOptions& opts,
                                 double tolerance) {
  VerificationReport report;
  report.case_name = transform.label.empty() ? "custom" : transform.label;
  report.params = {{"a", params.a}};
  report.tolerance = tolerance;
  report.diagnostics = master_lhs(transform, params, opts);
  report.lhs = report.diagnostics.value;
  report.rhs = master_rhs(transform, params);
  report.experimental = params.experimental() || !transform.schwarz;
  if (params.experimental()) {
    report.notes.push_back("complex or non-positive a: outside the proven range");
  }
  if (!transform.schwarz) {
    report.notes.push_back("F is not known to be real on the real axis");
  }
  finalize_report(report);
  return report;
}

VerificationReport verify_ramanujan(const KernelParams& params, double t,
                                    const QuadratureOptions& opts,
                                    double tolerance) {
  VerificationReport report;
  report.case_name = "kernel";
  report.params = {{"a", params.a}, {"t", Complex{t, 0.0}}};
  report.tolerance = tolerance;
  report.diagnostics = ramanujan_lhs(params, t, opts);
  report.lhs = report.diagnostics.value;
  report.rhs = ramanujan_rhs(params, t);
  report.experimental = params.experimental();
  finalize_report(report);
  return report;
}

void require_converged(const QuadratureResult& result, const std::string& what) {
  if (result.converged) return;
  std::ostringstream os;
  os << what << ": quadrature did not reach tolerance (error estimate "
     << result.error_estimate << ", window half-width "
     << result.truncation_used << ")";
  throw QuadratureError(QuadratureError::Kind::kNonConvergence, os.str(),
                        result.truncation_used);
}

}  // namespace glasser
