#pragma once

#include <functional>
#include <vector>

namespace mgdw::quadrature {

// How the integrand behaves at the interval endpoints. Square-root
// behavior (vanishing like sqrt(x-a), or weighted like 1/sqrt(x-a)) is
// removed analytically by substitution before the adaptive rule runs.
enum class Endpoints {
  Smooth,
  SqrtVanishingLeft,
  SqrtVanishingRight,
  SqrtVanishingBoth,
  InverseSqrtLeft,
  InverseSqrtRight,
};

struct IntegrandSpec {
  std::function<double(double)> f;
  double a = 0.0;
  double b = 1.0;
  Endpoints endpoints = Endpoints::Smooth;
  double abs_tol = 1e-10;
  int max_depth = 60;  // bisection refinement levels
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss quadrature with bisection refinement, after endpoint
// substitution chosen by spec.endpoints. Throws IntegrandError on NaN/inf
// samples and AccuracyError (carrying the best estimate) when the
// refinement budget is exhausted above tolerance.
QuadratureResult integrate(const IntegrandSpec& spec);

// Action integral of a momentum function between classical turning
// points: p >= 0 on [x1, x2], vanishing like a square root at both ends.
// Returns 0 for a degenerate interval. Throws ClassicallyForbiddenError
// if p is negative in the interior.
double action_integral(const std::function<double(double)>& p, double x1, double x2,
                       double abs_tol = 1e-10);

// Gauss-Legendre nodes and weights on [-1, 1], n >= 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

// Fixed-order Gauss-Legendre estimate (no adaptivity, no error control).
double fixed_gauss(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace mgdw::quadrature
