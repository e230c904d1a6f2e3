#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glasser/kernel.hpp"
#include "glasser/numerics.hpp"
#include "glasser/quadrature.hpp"

namespace glasser {

using ParamMap = std::map<std::string, Complex, std::less<>>;

enum class Domain { kHalfLine, kRealLine, kImaginaryAxis };

std::string_view to_string(Domain domain);

struct ParamSpec {
  std::string name;
  std::string constraint;  // human-readable
  Complex default_value;
};

/// A numeric value printed in the source for a specific parameter set.
struct PublishedCheck {
  ParamMap params;
  Complex expected;
  // Half a unit in the last printed digit.
  double tolerance;
};

/// One worked example of the master formula, in its printed normalization.
/// For the imaginary-axis domain the integrand is already written in the
/// real variable t of s = i t.
struct CaseDefinition {
  std::string id;
  std::string formula;  // one-line statement of the identity
  std::vector<ParamSpec> params;
  Domain domain;
  std::optional<PublishedCheck> published_check;
  std::string notes;

  // Throws InputError when params violate the case constraints.
  std::function<void(const ParamMap&)> validate;
  // The integrand may depend on the quadrature options (contour cut-off).
  std::function<Integrand(const ParamMap&, const QuadratureOptions&)>
      lhs_integrand;
  std::function<Complex(const ParamMap&)> rhs_closed_form;
  // Outside the proven parameter range (complex a, ...).
  std::function<bool(const ParamMap&)> experimental;
  // Case-specific remarks for a parameter set (warnings, known discrepancies).
  std::function<std::vector<std::string>(const ParamMap&)> remarks;

  ParamMap default_params() const;
};

/// The six built-in cases in catalog order: rational, bessel, gaussian,
/// cosine, gamma, zeta.
const std::vector<CaseDefinition>& list_cases();

/// Throws InputError for an unknown id.
const CaseDefinition& find_case(std::string_view id);

/// Defaults overlaid with `overrides`; unknown names throw InputError.
ParamMap resolve_params(const CaseDefinition& def, const ParamMap& overrides);

/// Evaluates both sides of a case. Missing parameters take their defaults.
VerificationReport run_case(std::string_view id, const ParamMap& params = {},
                            const QuadratureOptions& opts = {},
                            double tolerance = kDefaultTolerance);

/// Smallest distance from the contour w(t) = 4a(t^2 + i t), |t| <= t_max,
/// to one of the first nontrivial zeta zeros.
double zeta_contour_zero_distance(double a, double t_max);

}  // namespace glasser
