#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mgdw/errors.hpp"
#include "mgdw/potential.hpp"

using namespace mgdw;
using namespace mgdw::potential;

namespace {
OscillatorParams natural(double lambda) { return OscillatorParams(1.0, 1.0, 1.0, lambda); }
}  // namespace

TEST_CASE("parameters must be strictly positive") {
  CHECK_THROWS_AS(OscillatorParams(0.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(OscillatorParams(1.0, -1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(OscillatorParams(1.0, 1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("quartic evaluates to lambda x^4 - (m w^2/2) x^2 exactly") {
  auto p = OscillatorParams(2.0, 3.0, 1.5, 0.7);
  auto v = Potential1D::quartic_double_well(p);
  for (double x : {-2.0, -0.3, 0.0, 1.1, 4.5}) {
    double expected = 0.7 * x * x * x * x - 0.5 * 2.0 * 9.0 * x * x;
    CHECK(v.evaluate(x) == expected);
  }
}

TEST_CASE("quartic at x = 0 and at x = x0") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  CHECK(v.evaluate(0.0) == 0.0);
  // lambda x0^4 = (m w^2 / 2) x0^2 at x0^2 = m w^2 / (2 lambda)
  CHECK(v.evaluate(p.x0()) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("well bottom sits at x0/sqrt(2) with depth u_min") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  double x_bottom = p.x0() / std::numbers::sqrt2;
  CHECK(v.evaluate(x_bottom) == doctest::Approx(p.u_min()).epsilon(1e-12));
  // m^2 w^4 / (16 lambda) with m = w = hbar = 1
  CHECK(p.u_min() == doctest::Approx(-1.0 / (16.0 * 0.02)).epsilon(1e-14));
}

TEST_CASE("u_min at reference couplings") {
  CHECK(u_min(natural(0.01)) == doctest::Approx(-6.25).epsilon(1e-12));
  CHECK(u_min(natural(0.1)) == doctest::Approx(-0.625).epsilon(1e-12));
  CHECK(u_min(natural(1.0 / 16.0)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("dimensionless coupling and scaling invariance") {
  CHECK(to_dimensionless(natural(0.02)) == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(to_dimensionless(OscillatorParams(2.0, 1.0, 1.0, 0.08)) ==
        doctest::Approx(0.02).epsilon(1e-14));
  CHECK(to_dimensionless(OscillatorParams(1.0, 2.0, 2.0, 0.08)) ==
        doctest::Approx(0.02).epsilon(1e-14));

  // hbar lambda / (m^2 w^3) is untouched by (m, lambda) -> (a m, a^2 lambda)
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    double m = u(rng), w = u(rng), hb = u(rng), lam = u(rng), a = u(rng);
    double base = to_dimensionless(OscillatorParams(m, w, hb, lam));
    double scaled = to_dimensionless(OscillatorParams(a * m, w, hb, a * a * lam));
    CHECK(scaled == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("the quartic is even") {
  auto v = Potential1D::quartic_double_well(natural(0.03));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    double x = u(rng);
    CHECK(v.evaluate(x) == v.evaluate(-x));
  }
}

TEST_CASE("four turning points between the bottoms and the barrier top") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  double z = 0.1;
  double energy = (z * z - 1.0 / 16.0) / 0.02;  // inside (u_min, 0)
  auto pts = v.turning_points(energy);
  REQUIRE(pts.size() == 4);
  // symmetric pairs, v(x_i) = E, and x^2 = x0^2 (1/2 -+ 2z)
  double x0 = p.x0();
  CHECK(pts[0].x == doctest::Approx(-pts[3].x).epsilon(1e-12));
  CHECK(pts[1].x == doctest::Approx(-pts[2].x).epsilon(1e-12));
  CHECK(pts[2].x == doctest::Approx(x0 * std::sqrt(0.5 - 2.0 * z)).epsilon(1e-10));
  CHECK(pts[3].x == doctest::Approx(x0 * std::sqrt(0.5 + 2.0 * z)).epsilon(1e-10));
  for (const auto& tp : pts)
    CHECK(v.evaluate(tp.x) == doctest::Approx(energy).epsilon(1e-12));
}

TEST_CASE("turning points collapse pairwise toward the bottoms as E -> u_min") {
  auto p = natural(0.05);
  auto v = Potential1D::quartic_double_well(p);
  double bottom = p.x0() / std::numbers::sqrt2;
  auto pts = v.turning_points(p.u_min() * (1.0 - 1e-10));
  REQUIRE(pts.size() == 4);
  CHECK(pts[2].x == doctest::Approx(bottom).epsilon(1e-5));
  CHECK(pts[3].x == doctest::Approx(bottom).epsilon(1e-5));
}

TEST_CASE("E = 0 gives a double root at the origin") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  auto pts = v.turning_points(0.0);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].x == doctest::Approx(-p.x0()).epsilon(1e-12));
  CHECK(pts[1].x == 0.0);
  CHECK(pts[1].multiplicity == 2);
  CHECK(pts[2].x == doctest::Approx(p.x0()).epsilon(1e-12));
}

TEST_CASE("energies at or below the bottoms have no turning points") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  CHECK_THROWS_AS(v.turning_points(p.u_min()), NoTurningPointsError);
  CHECK_THROWS_AS(v.turning_points(p.u_min() - 1.0), NoTurningPointsError);
}

TEST_CASE("turning points satisfy v(x) = E to 1e-12 |u_min|") {
  auto p = natural(0.02);
  auto v = Potential1D::quartic_double_well(p);
  double scale = std::fabs(p.u_min());
  for (double frac : {0.9, 0.5, 0.1, 0.01}) {
    double energy = p.u_min() * frac;
    auto pts = v.turning_points(energy);
    REQUIRE(pts.size() == 4);
    for (const auto& tp : pts)
      CHECK(std::fabs(v.evaluate(tp.x) - energy) <= 1e-12 * scale);
  }
}

TEST_CASE("harmonic turning points") {
  auto v = Potential1D::harmonic(1.0, 1.0);
  auto pts = v.turning_points(0.5);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pts[1].x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(v.turning_points(-0.1), NoTurningPointsError);
}

TEST_CASE("custom potential: domain checks and scanned turning points") {
  auto v = Potential1D::custom([](double x) { return x * x * x * x; }, -3.0, 3.0, "pure-quartic");
  CHECK_THROWS_AS(v.evaluate(5.0), DomainError);
  auto pts = v.turning_points(1.0);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(pts[1].x == doctest::Approx(1.0).epsilon(1e-9));
}
