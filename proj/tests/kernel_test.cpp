#include <cmath>
#include <random>

#include "doctest.h"
#include "glasser/kernel.hpp"

using glasser::Complex;
using glasser::KernelParams;
using glasser::kPi;
using glasser::TransformFunction;

namespace {

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

TransformFunction rational(double b) {
  return {[b](Complex k) { return 1.0 / (k + b); }, true, "rational"};
}

// cosh x / (1 + 2a^2 cosh 2x + a^4) straight from the definition.
double direct_weight(double a, double x) {
  return std::cosh(x) / (1.0 + 2.0 * a * a * std::cosh(2.0 * x) + std::pow(a, 4));
}

}  // namespace

TEST_CASE("kernel weight examples") {
  CHECK(glasser::kernel_weight({{1.0, 0.0}}, 0.0) == Complex{0.25, 0.0});
  for (double x : {-3.0, -0.5, 0.1, 2.0, 40.0}) {
    const Complex w = glasser::kernel_weight({{1.0, 0.0}}, x);
    CHECK(rel_err(w, 1.0 / (4.0 * std::cosh(x))) < 1e-14);
  }
  const Complex w = glasser::kernel_weight({{0.7, 0.0}}, 1.0);
  CHECK(rel_err(w, direct_weight(0.7, 1.0)) < 1e-14);
  CHECK(w.real() == doctest::Approx(0.313185390487769193).epsilon(1e-14));
}

TEST_CASE("kernel factorization and direct formula agree") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ua(0.1, 10.0), ux(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng), x = ux(rng);
    const double a2 = a * a;
    const double plain = 1.0 + 2.0 * a2 * std::cosh(2.0 * x) + a2 * a2;
    const double factored = (a2 + std::exp(2.0 * x)) * (a2 + std::exp(-2.0 * x));
    CHECK(std::abs(plain - factored) <= 1e-12 * plain);
    CHECK(rel_err(glasser::kernel_weight({{a, 0.0}}, x), direct_weight(a, x)) < 1e-12);
  }
}

TEST_CASE("kernel symmetries") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ua(0.1, 10.0), ux(-30.0, 30.0);
  for (int i = 0; i < 500; ++i) {
    const double a = ua(rng), x = ux(rng);
    const KernelParams p{{a, 0.0}};
    CHECK(glasser::kernel_weight(p, -x) == glasser::kernel_weight(p, x));
    const Complex inv = glasser::kernel_weight({{1.0 / a, 0.0}}, x);
    CHECK(rel_err(inv, std::pow(a, 4) * glasser::kernel_weight(p, x)) < 1e-12);
    const auto f = rational(1.5);
    CHECK(rel_err(glasser::master_rhs(f, {{1.0 / a, 0.0}}),
                  std::pow(a, 4) * glasser::master_rhs(f, p)) < 1e-12);
    CHECK(rel_err(glasser::kernel_weight({{1.0, 0.0}}, x), 0.25 / std::cosh(x)) < 1e-14);
  }
}

TEST_CASE("kernel weight far out and at complex a") {
  const Complex far = glasser::kernel_weight({{2.0, 0.0}}, 700.0);
  CHECK(std::isfinite(far.real()));
  CHECK(far.real() > 0.0);
  // a = i: (1 + a^2 u)(a^2 + u) vanishes at x = 0.
  CHECK_THROWS_AS(glasser::kernel_weight({{0.0, 1.0}}, 0.0), glasser::NumericError);
  CHECK_NOTHROW(glasser::kernel_weight({{1.0, 2.0}}, 0.0));
}

TEST_CASE("kernel params validation") {
  const KernelParams zero{{0.0, 0.0}};
  CHECK_THROWS_AS(zero.validate(), glasser::InputError);
  CHECK_FALSE(KernelParams{{0.7, 0.0}}.experimental());
  CHECK(KernelParams{{1.0, 2.0}}.experimental());
  CHECK(KernelParams{{-1.0, 0.0}}.experimental());
}

TEST_CASE("seed closed form") {
  const Complex at_one = glasser::ramanujan_rhs({{1.0, 0.0}}, 1.0);
  CHECK(rel_err(at_one, kPi * std::exp(-kPi * kPi / 4.0) / 8.0) < 1e-15);
  const double e = std::exp(1.0);
  const Complex at_e = glasser::ramanujan_rhs({{e, 0.0}}, 1.0);
  CHECK(rel_err(at_e, kPi * std::exp(-(kPi * kPi / 4.0 + 1.0)) / (4.0 * e * (1.0 + e * e))) <
        1e-14);
  CHECK(at_e.real() == doctest::Approx(0.00107450672133647334).epsilon(1e-13));
  for (double t : {0.2, 1.0, 3.0}) {
    const Complex ratio =
        glasser::ramanujan_rhs({{2.0, 0.0}}, t) / glasser::ramanujan_rhs({{0.5, 0.0}}, t);
    CHECK(std::abs(ratio - 1.0 / 16.0) < 1e-15);
  }
  CHECK_THROWS_AS(glasser::ramanujan_rhs({{1.0, 0.0}}, 0.0), glasser::InputError);
}

TEST_CASE("seed integral matches its closed form") {
  const struct {
    double a, t;
  } cases[] = {{1.0, 1.0}, {0.7, 2.0}, {3.0, 0.5}};
  for (const auto& c : cases) {
    const KernelParams p{{c.a, 0.0}};
    const auto lhs = glasser::ramanujan_lhs(p, c.t);
    CHECK(rel_err(lhs.value, glasser::ramanujan_rhs(p, c.t)) < 1e-9);
  }
}

TEST_CASE("master right side examples") {
  const TransformFunction one{[](Complex) { return Complex{1.0, 0.0}; }, true, "one"};
  CHECK(rel_err(glasser::master_rhs(one, {{1.0, 0.0}}), kPi / 4.0) < 1e-15);
  // Twice the printed half-line value 0.163891 (full line vs [0, inf)).
  const Complex r = glasser::master_rhs(rational(2.0), {{0.7, 0.0}});
  CHECK(r.real() == doctest::Approx(2.0 * 0.163891395181855875).epsilon(1e-14));
  CHECK(std::abs(r.real() - 2.0 * 0.163891) < 1e-6);
  // cos(0.1 k) at a = 1 + 2i: twice the half-line value
  // -0.0783703402526245789 + 0.00264214290708537441i.
  const TransformFunction cosine{[](Complex k) { return std::cos(0.1 * k); }, true, "cos"};
  const Complex c = glasser::master_rhs(cosine, {{1.0, 2.0}});
  CHECK(rel_err(c, 2.0 * Complex{-0.0783703402526245789, 0.00264214290708537441}) < 1e-14);
}

TEST_CASE("master left side examples") {
  const auto lhs = glasser::master_lhs(rational(2.0), {{0.7, 0.0}});
  CHECK(rel_err(lhs.value, 2.0 * 0.163891395181855875) < 1e-9);
  CHECK(std::abs(lhs.value.imag()) <= lhs.error_estimate);

  const TransformFunction gauss{[](Complex k) { return std::exp(-0.3 * k * k); }, true, "g"};
  const auto g = glasser::master_lhs(gauss, {{0.3, 0.0}});
  CHECK(rel_err(g.value, 2.0 * 0.0240764197588046020) < 1e-9);
  CHECK(std::abs(g.value.imag()) <= g.error_estimate);
}

TEST_CASE("verify_master examples") {
  const auto r = glasser::verify_master(rational(2.0), {{0.7, 0.0}}, {}, 1e-8);
  CHECK(r.pass);
  CHECK_FALSE(r.experimental);

  // a = 1: (1/4) Int sech(x)/(x^2 + i pi x + 1) dx = pi / (4 + pi^2).
  const auto s = glasser::verify_master(rational(1.0), {{1.0, 0.0}});
  CHECK(s.pass);
  CHECK(rel_err(s.rhs, kPi / (4.0 + kPi * kPi)) < 1e-15);
  CHECK(rel_err(s.lhs, kPi / (4.0 + kPi * kPi)) < 1e-9);

  const TransformFunction growing{[](Complex k) { return std::exp(k); }, true, "exp"};
  try {
    glasser::verify_master(growing, {{1.0, 0.0}});
    FAIL("expected divergence");
  } catch (const glasser::QuadratureError& e) {
    CHECK(e.kind() == glasser::QuadratureError::Kind::kDivergence);
  }
}

TEST_CASE("non-Schwarz transforms and complex a are flagged") {
  const TransformFunction shifted{[](Complex k) { return 1.0 / (k + Complex{2.0, 1.0}); },
                                  false, "shifted"};
  const auto r = glasser::verify_master(shifted, {{0.7, 0.0}});
  CHECK(r.experimental);
  CHECK_FALSE(r.notes.empty());
  const auto c = glasser::verify_master(rational(2.0), {{1.0, 0.5}});
  CHECK(c.experimental);
}

TEST_CASE("rational transform has Schwarz symmetry") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  const auto f = rational(0.5);
  for (int i = 0; i < 1000; ++i) {
    const Complex k{u(rng), u(rng)};
    CHECK(std::abs(f(std::conj(k)) - std::conj(f(k))) < 1e-12);
  }
}

TEST_CASE("master identity over a family of rational transforms") {
  for (double b : {0.5, 1.0, 2.0, 5.0}) {
    for (double a : {0.3, 0.7, 1.0, 2.0, 5.0}) {
      const auto r = glasser::verify_master(rational(b), {{a, 0.0}}, {}, 1e-8);
      CHECK_MESSAGE(r.pass, "b=" << b << " a=" << a << " rel=" << r.rel_diff);
    }
  }
}

TEST_CASE("report bookkeeping") {
  glasser::VerificationReport r;
  r.lhs = {1.0, 0.0};
  r.rhs = {1.0 + 1e-9, 0.0};
  r.tolerance = 1e-8;
  glasser::finalize_report(r);
  CHECK(r.abs_diff == doctest::Approx(1e-9));
  CHECK(r.rel_diff == doctest::Approx(1e-9 / (1.0 + 1e-9)));
  CHECK(r.pass);

  r.lhs = {1e-12, 0.0};
  r.rhs = {0.0, 0.0};
  glasser::finalize_report(r);
  CHECK(r.rel_diff == doctest::Approx(1e-12 / glasser::kRelDiffFloor));
  CHECK(r.pass);  // abs_diff below tolerance

  r.lhs = {2.0, 0.0};
  r.rhs = {1.0, 0.0};
  glasser::finalize_report(r);
  CHECK_FALSE(r.pass);
}
