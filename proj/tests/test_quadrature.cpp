#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mgdw/errors.hpp"
#include "mgdw/quadrature.hpp"

using namespace mgdw;
using namespace mgdw::quadrature;

namespace {
constexpr double kPi = std::numbers::pi;

IntegrandSpec spec_of(std::function<double(double)> f, double a, double b,
                      Endpoints ep = Endpoints::Smooth, double tol = 1e-12) {
  IntegrandSpec s;
  s.f = std::move(f);
  s.a = a;
  s.b = b;
  s.endpoints = ep;
  s.abs_tol = tol;
  return s;
}
}  // namespace

TEST_CASE("half unit circle area") {
  auto r = integrate(spec_of([](double x) { return std::sqrt(std::max(1.0 - x * x, 0.0)); }, -1.0,
                             1.0, Endpoints::SqrtVanishingBoth, 1e-12));
  CHECK(r.value == doctest::Approx(kPi / 2.0).epsilon(1e-10));
}

TEST_CASE("sqrt(1 - eta) has antiderivative -(2/3)(1-eta)^(3/2)") {
  auto r = integrate(spec_of([](double x) { return std::sqrt(std::max(1.0 - x, 0.0)); }, -1.0, 1.0,
                             Endpoints::SqrtVanishingRight, 1e-12));
  CHECK(r.value == doctest::Approx(4.0 * std::numbers::sqrt2 / 3.0).epsilon(1e-10));
}

TEST_CASE("cubic is integrated exactly by low-order Gauss rules") {
  auto x3 = [](double x) { return x * x * x; };
  for (int order = 2; order <= 8; ++order)
    CHECK(fixed_gauss(x3, 0.0, 1.0, order) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("gauss_legendre nodes integrate polynomials to degree 2n-1") {
  // order 5 handles x^9 exactly: integral over [0,1] is 1/10
  auto x9 = [](double x) { return std::pow(x, 9); };
  CHECK(fixed_gauss(x9, 0.0, 1.0, 5) == doctest::Approx(0.1).epsilon(1e-13));
  auto rule = gauss_legendre(5);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("inverse square-root endpoint weights") {
  auto left = integrate(spec_of([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                Endpoints::InverseSqrtLeft, 1e-12));
  CHECK(left.value == doctest::Approx(2.0).epsilon(1e-10));
  auto right = integrate(spec_of([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0,
                                 Endpoints::InverseSqrtRight, 1e-12));
  CHECK(right.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("action integral of the harmonic oscillator is pi E / omega") {
  // p(x) = sqrt(2 (E - x^2/2)), turning points at +-sqrt(2E)
  for (double E : {0.5, 3.5}) {
    auto p = [E](double x) { return std::sqrt(std::max(2.0 * (E - 0.5 * x * x), 0.0)); };
    double xt = std::sqrt(2.0 * E);
    CHECK(action_integral(p, -xt, xt, 1e-12) == doctest::Approx(kPi * E).epsilon(1e-10));
  }
}

TEST_CASE("degenerate action interval is zero") {
  auto p = [](double) { return 1.0; };
  CHECK(action_integral(p, 1.0, 1.0) == 0.0);
}

TEST_CASE("negative momentum inside the interval is rejected") {
  auto p = [](double x) { return 0.5 - x * x; };  // negative near the ends of [-1, 1]
  CHECK_THROWS_AS(action_integral(p, -1.0, 1.0), ClassicallyForbiddenError);
}

TEST_CASE("NaN sample raises an integrand error") {
  auto bad = spec_of([](double x) { return x < 0.5 ? 1.0 : std::nan(""); }, 0.0, 1.0);
  CHECK_THROWS_AS(integrate(bad), IntegrandError);
}

TEST_CASE("refinement exhaustion reports the best estimate") {
  // a 1e-3-wide Lorentzian spike cannot be resolved in 6 bisection levels;
  // exact value is 2000 atan(1000) ~= 3139.59
  auto spike = spec_of([](double x) { return 1.0 / (1e-6 + x * x); }, -1.0, 1.0,
                       Endpoints::Smooth, 1e-10);
  spike.max_depth = 6;
  try {
    integrate(spike);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(e.error_estimate > 1e-10);
    CHECK(e.best_estimate == doctest::Approx(2000.0 * std::atan(1000.0)).epsilon(1e-2));
  }
}

TEST_CASE("invalid interval and tolerance are rejected") {
  CHECK_THROWS_AS(integrate(spec_of([](double) { return 1.0; }, 1.0, 0.0)), DomainError);
  auto s = spec_of([](double) { return 1.0; }, 0.0, 1.0);
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate(s), DomainError);
}

TEST_CASE("additivity over adjacent intervals") {
  auto f = [](double x) { return std::exp(-x) * std::cos(5.0 * x); };
  auto whole = integrate(spec_of(f, 0.0, 2.0));
  auto left = integrate(spec_of(f, 0.0, 0.7));
  auto right = integrate(spec_of(f, 0.7, 2.0));
  CHECK(whole.value ==
        doctest::Approx(left.value + right.value).epsilon(1e-11));
}

TEST_CASE("odd integrands over symmetric intervals vanish") {
  auto f = [](double x) { return x * std::cos(x * x) + std::sin(3.0 * x); };
  auto r = integrate(spec_of(f, -2.0, 2.0));
  CHECK(std::fabs(r.value) < 1e-10);
}

TEST_CASE("tightening the tolerance never raises the reported error estimate") {
  auto f = [](double x) { return std::sqrt(std::max(1.0 - x * x, 0.0)) / (1.0 + x * x); };
  double prev = 1e300;
  for (double tol : {1e-6, 5e-7, 2.5e-7, 1e-8, 1e-10}) {
    auto r = integrate(spec_of(f, -1.0, 1.0, Endpoints::SqrtVanishingBoth, tol));
    CHECK(r.error_estimate <= prev);
    prev = r.error_estimate;
  }
}

TEST_CASE("deterministic for a fixed spec") {
  auto f = [](double x) { return std::sin(x) / (1.0 + x); };
  auto a = integrate(spec_of(f, 0.0, 3.0));
  auto b = integrate(spec_of(f, 0.0, 3.0));
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.evaluations == b.evaluations);
}
