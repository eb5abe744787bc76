#include "mgdw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgdw/errors.hpp"

namespace mgdw::quadrature {
namespace {

// Gauss 7 / Kronrod 15 pair on [-1, 1]; the embedded Gauss rule supplies
// the error estimate.
constexpr double kKronrodX[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
constexpr double kKronrodW[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussW[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

struct PanelEstimate {
  double value;
  double error;
};

template <class F>
PanelEstimate gauss_kronrod(const F& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double g7 = 0.0, k15 = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fi;
    if (i == 0) {
      fi = f(c);
      evals += 1;
    } else {
      fi = f(c + h * kKronrodX[i]) + f(c - h * kKronrodX[i]);
      evals += 2;
    }
    if (!std::isfinite(fi)) throw IntegrandError("integrand sample is not finite");
    k15 += kKronrodW[i] * fi;
    if (i % 2 == 0) g7 += kGaussW[i / 2] * fi;
  }
  return {k15 * h, std::fabs(k15 - g7) * std::fabs(h)};
}

// Adaptive driver: interval stack with depth-limited bisection. The
// tolerance budget is distributed proportionally to interval width.
QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  struct Interval {
    double a, b;
    int depth;
  };
  const double width = b - a;
  std::vector<Interval> stack{{a, b, 0}};
  double sum = 0.0, err_sum = 0.0;
  long evals = 0;
  bool budget_hit = false;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    PanelEstimate est = gauss_kronrod(f, iv.a, iv.b, evals);
    // floor the local demand near machine precision so refinement terminates
    double local_tol = std::max(abs_tol * (iv.b - iv.a) / width, 5e-17);
    if (est.error <= local_tol || iv.depth >= max_depth) {
      if (est.error > local_tol) budget_hit = true;
      sum += est.value;
      err_sum += est.error;
      continue;
    }
    double m = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, m, iv.depth + 1});
    stack.push_back({m, iv.b, iv.depth + 1});
  }
  if (budget_hit && err_sum > abs_tol)
    throw AccuracyError("quadrature did not converge within refinement budget", sum, err_sum);
  return {sum, err_sum, evals};
}

}  // namespace

QuadratureResult integrate(const IntegrandSpec& spec) {
  if (!(spec.a < spec.b)) throw DomainError("integration interval requires a < b");
  if (!(spec.abs_tol > 0.0)) throw DomainError("tolerance must be positive");

  const auto& f = spec.f;
  const double a = spec.a, b = spec.b;

  switch (spec.endpoints) {
    case Endpoints::Smooth:
      return adaptive(f, a, b, spec.abs_tol, spec.max_depth);

    case Endpoints::SqrtVanishingBoth: {
      // x = c + r cos(theta): a factor sin(theta) from dx cancels the
      // square-root vanishing at both ends, leaving a smooth integrand.
      const double c = 0.5 * (a + b), r = 0.5 * (b - a);
      auto g = [&f, c, r](double theta) {
        return f(c - r * std::cos(theta)) * r * std::sin(theta);
      };
      return adaptive(g, 0.0, std::numbers::pi, spec.abs_tol, spec.max_depth);
    }

    case Endpoints::SqrtVanishingLeft:
    case Endpoints::InverseSqrtLeft: {
      // x = a + w t^2 straightens sqrt(x - a) factors (in either position).
      const double w = b - a;
      auto g = [&f, a, w](double t) { return f(a + w * t * t) * 2.0 * w * t; };
      return adaptive(g, 0.0, 1.0, spec.abs_tol, spec.max_depth);
    }

    case Endpoints::SqrtVanishingRight:
    case Endpoints::InverseSqrtRight: {
      const double w = b - a;
      auto g = [&f, b, w](double t) { return f(b - w * t * t) * 2.0 * w * t; };
      return adaptive(g, 0.0, 1.0, spec.abs_tol, spec.max_depth);
    }
  }
  throw DomainError("unknown endpoint tag");
}

double action_integral(const std::function<double(double)>& p, double x1, double x2,
                       double abs_tol) {
  if (x1 > x2) throw DomainError("action interval requires x1 <= x2");
  if (x1 == x2) return 0.0;
  // p must be real and non-negative strictly inside the interval
  const int samples = 64;
  for (int i = 1; i < samples; ++i) {
    double x = x1 + (x2 - x1) * i / samples;
    double v = p(x);
    if (std::isnan(v) || v < -1e-12 * (1.0 + std::fabs(v)))
      throw ClassicallyForbiddenError("momentum negative inside action interval");
  }
  IntegrandSpec spec;
  spec.f = [&p](double x) { return std::max(p(x), 0.0); };
  spec.a = x1;
  spec.b = x2;
  spec.endpoints = Endpoints::SqrtVanishingBoth;
  spec.abs_tol = abs_tol;
  return integrate(spec).value;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss rule order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on the Legendre polynomial from the Chebyshev guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double fixed_gauss(const std::function<double(double)>& f, double a, double b, int n) {
  GaussRule rule = gauss_legendre(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(c + h * rule.nodes[i]);
  return sum * h;
}

}  // namespace mgdw::quadrature
