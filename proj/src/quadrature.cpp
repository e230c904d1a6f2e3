#include "glasser/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace glasser {
namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

Complex checked_eval(const Integrand& f, double x) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at x = " << x;
    throw QuadratureError(QuadratureError::Kind::kNonFinite, os.str(), x);
  }
  return v;
}

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = checked_eval(f, center);
  Complex kronrod = fc * kKronrodWeights[7];
  Complex gauss = fc * kGaussWeights[3];
  double magnitude = std::abs(fc) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const Complex lo_val = checked_eval(f, center - dx);
    const Complex hi_val = checked_eval(f, center + dx);
    const Complex pair = lo_val + hi_val;
    kronrod += kKronrodWeights[j] * pair;
    magnitude += kKronrodWeights[j] * (std::abs(lo_val) + std::abs(hi_val));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  magnitude *= std::abs(half);
  // Rounding floor: the rule cannot resolve below a few ulps of Int |f|.
  const double floor = 5.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {lo, hi, kronrod, std::max(std::abs(kronrod - gauss), floor)};
}

double target_error(const QuadratureOptions& opts, Complex value) {
  return std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
}

// One window on an unbounded domain: [inner, outer] on the right and, for the
// symmetric case, [-outer, -inner] on the left.
QuadratureResult integrate_window(const Integrand& f, double inner,
                                  double outer, bool symmetric,
                                  const QuadratureOptions& opts) {
  QuadratureResult right = integrate_finite(f, inner, outer, opts);
  if (!symmetric) return right;
  QuadratureResult left = integrate_finite(f, -outer, -inner, opts);
  QuadratureResult sum;
  sum.value = left.value + right.value;
  sum.error_estimate = left.error_estimate + right.error_estimate;
  sum.evaluations = left.evaluations + right.evaluations;
  sum.converged = left.converged && right.converged;
  return sum;
}

QuadratureResult integrate_unbounded(const Integrand& f, bool symmetric,
                                     const QuadratureOptions& opts) {
  opts.validate();
  double width = opts.initial_truncation;

  QuadratureOptions first_opts = opts;
  first_opts.abs_tol *= 0.5;
  first_opts.rel_tol *= 0.5;
  QuadratureResult total =
      integrate_finite(f, symmetric ? -width : 0.0, width, first_opts);
  bool windows_converged = total.converged;
  double previous = std::abs(total.value);
  int rises = 0;

  while (true) {
    if (width >= opts.max_truncation) {
      total.converged = false;
      break;
    }
    const double next = std::min(width * opts.window_growth, opts.max_truncation);
    QuadratureOptions window_opts = opts;
    window_opts.abs_tol = 0.1 * target_error(opts, total.value);
    window_opts.rel_tol = 0.1 * opts.rel_tol;
    const QuadratureResult window =
        integrate_window(f, width, next, symmetric, window_opts);
    width = next;
    total.value += window.value;
    total.error_estimate += window.error_estimate;
    total.evaluations += window.evaluations;
    windows_converged = windows_converged && window.converged;

    const double contribution = std::abs(window.value);
    if (contribution <= 0.1 * target_error(opts, total.value)) {
      total.error_estimate += contribution;
      total.converged =
          windows_converged &&
          total.error_estimate <= target_error(opts, total.value);
      break;
    }
    rises = contribution >= previous ? rises + 1 : 0;
    if (rises >= 2) {
      std::ostringstream os;
      os << "integrand does not decay: window contributions grew twice in a "
            "row up to |x| = "
         << width << " (last contribution " << contribution << ")";
      throw QuadratureError(QuadratureError::Kind::kDivergence, os.str(),
                            width);
    }
    previous = contribution;
    if (width >= opts.max_truncation) {
      total.error_estimate += contribution;
    }
  }
  total.truncation_used = width;
  return total;
}

}  // namespace

void QuadratureOptions::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InputError("quadrature tolerances must be positive");
  }
  if (max_subdivisions == 0) {
    throw InputError("max_subdivisions must be at least 1");
  }
  if (!(initial_truncation > 0.0) || !(initial_truncation < max_truncation)) {
    throw InputError("need 0 < initial_truncation < max_truncation");
  }
  if (!(window_growth > 1.0)) {
    throw InputError("window_growth must exceed 1");
  }
}

QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const QuadratureOptions& opts) {
  if (!(lo < hi)) throw InputError("integrate_finite needs lo < hi");

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  std::vector<Segment> done;  // segments that can no longer be bisected
  Segment whole = gauss_kronrod(f, lo, hi);
  std::size_t evaluations = 15;
  Complex value = whole.value;
  double error = whole.error;
  heap.push(whole);

  bool exhausted = false;
  while (error > target_error(opts, value)) {
    if (heap.empty() || heap.size() + done.size() >= opts.max_subdivisions) {
      exhausted = true;
      break;
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      done.push_back(worst);
      continue;
    }
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Final sums in left-to-right order so the result does not depend on the
  // running-sum history.
  std::vector<Segment> all = std::move(done);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  QuadratureResult result;
  for (const Segment& s : all) {
    result.value += s.value;
    result.error_estimate += s.error;
  }
  result.evaluations = evaluations;
  result.converged =
      !exhausted && result.error_estimate <= target_error(opts, result.value);
  return result;
}

QuadratureResult integrate_half_line(const Integrand& f,
                                     const QuadratureOptions& opts) {
  return integrate_unbounded(f, false, opts);
}

QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureOptions& opts) {
  return integrate_unbounded(f, true, opts);
}

}  // namespace glasser
