#include "mgdw/doublewell.hpp"

#include <cmath>
#include <numbers>

#include "mgdw/errors.hpp"
#include "mgdw/parallel.hpp"
#include "mgdw/quadrature.hpp"
#include "mgdw/rootfind.hpp"

namespace mgdw::doublewell {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kZMax = 0.25;
}  // namespace

double eta_integral(double z, double abs_tol) {
  if (!(z >= 0.0) || z > kZMax + 1e-15) throw DomainError("eta_integral requires z in [0, 1/4]");
  quadrature::IntegrandSpec spec;
  spec.f = [z](double eta) {
    double num = 1.0 - eta * eta;
    if (num < 0.0) num = 0.0;
    return std::sqrt(num / (1.0 + 4.0 * z * eta));
  };
  spec.a = -1.0;
  spec.b = 1.0;
  spec.endpoints = quadrature::Endpoints::SqrtVanishingBoth;
  spec.abs_tol = abs_tol;
  return quadrature::integrate(spec).value;
}

double lambda_max() {
  // z = 1/4 in the quantization condition: lambda'_max = sqrt(2) I(1/4) / (8 pi)
  static const double value = kSqrt2 * eta_integral(kZMax, 1e-13) / (8.0 * kPi);
  return value;
}

ZSolution solve_z(double lambda_prime, double residual_tol) {
  if (!(lambda_prime > 0.0)) throw DomainError("lambda' must be positive");
  if (lambda_prime > lambda_max())
    throw NoBoundStateError("no negative-energy ground state for lambda' above lambda_max");

  // g(z) = sqrt(2) z^2 I(z) - lambda' pi/2 is strictly increasing, so the
  // bracket (eps, 1/4] always contains exactly one root.
  auto g = [lambda_prime](double z) {
    return kSqrt2 * z * z * eta_integral(z, 1e-13) - lambda_prime * kPi / 2.0;
  };
  RootOptions opt;
  opt.f_tol = residual_tol * lambda_prime;  // residual is measured after dividing by lambda'
  opt.x_tol = 1e-16;
  opt.max_iterations = 200;
  RootResult root;
  if (g(kZMax) <= 0.0) {
    // lambda' passed the lambda_max check but rounding puts the root at the
    // z = 1/4 boundary itself
    root = {kZMax, g(kZMax), 0};
  } else {
    root = solve_bracketed(g, 1e-8, kZMax, opt);
  }

  ZSolution s;
  s.lambda_prime = lambda_prime;
  s.z = root.x;
  s.iterations = root.iterations;
  s.eta_integral_value = eta_integral(root.x, 1e-13);
  double z2 = root.x * root.x;
  s.e_over_hw = (z2 - 1.0 / 16.0) / lambda_prime;
  // store z^2 through the same arithmetic the consistency identity uses
  s.z_squared = s.e_over_hw * lambda_prime + 1.0 / 16.0;
  s.e_over_umin = 1.0 - 16.0 * s.z_squared;
  s.residual = std::fabs(kPi / 2.0 - kSqrt2 * (z2 / lambda_prime) * s.eta_integral_value);
  return s;
}

GroundEnergy ground_energy(double lambda_prime) {
  ZSolution s = solve_z(lambda_prime);
  return {s.e_over_hw, s.e_over_umin};
}

namespace {

template <class ForLoop>
std::vector<SweepRow> sweep_impl(const std::vector<double>& lambda_primes, ForLoop&& loop) {
  std::vector<SweepRow> rows(lambda_primes.size());
  loop(static_cast<std::ptrdiff_t>(lambda_primes.size()), [&](std::ptrdiff_t i) {
    rows[i].lambda_prime = lambda_primes[i];
    try {
      rows[i].solution = solve_z(lambda_primes[i]);
    } catch (const Error& e) {
      rows[i].error = e.what();
    }
  });
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep(const std::vector<double>& lambda_primes) {
  return sweep_impl(lambda_primes, [](std::ptrdiff_t n, auto&& body) { parallel_for(n, body); });
}

std::vector<SweepRow> sweep_serial(const std::vector<double>& lambda_primes) {
  return sweep_impl(lambda_primes, [](std::ptrdiff_t n, auto&& body) { serial_for(n, body); });
}

}  // namespace mgdw::doublewell
