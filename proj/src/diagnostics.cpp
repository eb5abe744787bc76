#include "mgdw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgdw/doublewell.hpp"
#include "mgdw/errors.hpp"
#include "mgdw/parallel.hpp"
#include "mgdw/quadrature.hpp"

namespace mgdw::diagnostics {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Left partial action of the reduced auxiliary side:
// G(xi) = integral_{-1}^{xi} sqrt(1-t^2) dt, mapping [-1,1] -> [0, pi/2].
double G(double xi) {
  xi = std::clamp(xi, -1.0, 1.0);
  return 0.5 * (xi * std::sqrt(std::max(1.0 - xi * xi, 0.0)) + std::asin(xi)) + kPi / 4.0;
}

double G_inverse(double target) {
  target = std::clamp(target, 0.0, kPi / 2.0);
  if (target <= 0.0) return -1.0;
  if (target >= kPi / 2.0) return 1.0;
  double lo = -1.0, hi = 1.0, xi = 0.0;
  for (int it = 0; it < 100; ++it) {
    double f = G(xi) - target;
    if (std::fabs(f) < 1e-16) return xi;
    if (f > 0.0) hi = xi; else lo = xi;
    double slope = std::sqrt(std::max(1.0 - xi * xi, 0.0));
    double step = (slope > 1e-14) ? xi - f / slope : 0.5 * (lo + hi);
    xi = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    if (hi - lo < 4e-16) break;
  }
  return xi;
}

double weight(double z, double t) {
  double num = 1.0 - t * t;
  if (num < 0.0) num = 0.0;
  return std::sqrt(num / (1.0 + 4.0 * z * t));
}

template <class ForLoop>
XiMapping xi_mapping_impl(double z, double lambda_prime, int grid_size, ForLoop&& loop) {
  if (grid_size < 64) throw DomainError("xi mapping grid must have at least 64 intervals");
  if (!(z > 0.0) || z > 0.25) throw DomainError("z must lie in (0, 1/4]");
  if (!(lambda_prime > 0.0)) throw DomainError("lambda' must be positive");

  const double q = kSqrt2 * z * z / lambda_prime;
  const double residual = std::fabs(kPi / 2.0 - q * doublewell::eta_integral(z, 1e-13));
  if (residual > 1e-8)
    throw InconsistentParametersError("(z, lambda') does not satisfy the quantization condition");

  const int n = grid_size;
  XiMapping map;
  map.z = z;
  map.lambda_prime = lambda_prime;
  map.eta.resize(n + 1);
  map.xi.resize(n + 1);
  map.dxi_deta.resize(n + 1);
  for (int i = 0; i <= n; ++i) map.eta[i] = -1.0 + 2.0 * i / n;

  // panel integrals of the weight are independent; the running sum is a
  // cheap serial pass afterwards
  std::vector<double> panel(n, 0.0);
  loop(n, [&](std::ptrdiff_t i) {
    quadrature::IntegrandSpec spec;
    spec.f = [z](double t) { return weight(z, t); };
    spec.a = map.eta[i];
    spec.b = map.eta[i + 1];
    spec.endpoints = (i == 0)     ? quadrature::Endpoints::SqrtVanishingLeft
                     : (i == n - 1) ? quadrature::Endpoints::SqrtVanishingRight
                                    : quadrature::Endpoints::Smooth;
    spec.abs_tol = 1e-13 / n;
    panel[i] = quadrature::integrate(spec).value;
  });
  std::vector<double> partial(n + 1, 0.0);
  for (int i = 0; i < n; ++i) partial[i + 1] = partial[i] + panel[i];

  map.xi[0] = -1.0;
  map.xi[n] = 1.0;
  loop(n - 1, [&](std::ptrdiff_t k) {
    int i = static_cast<int>(k) + 1;
    map.xi[i] = G_inverse(q * partial[i]);
  });

  // interior derivative from the mapping relation; endpoint values are the
  // one-sided limits (q / sqrt(1 -+ 4z))^(2/3)
  map.dxi_deta[0] = std::pow(q / std::sqrt(1.0 - 4.0 * z), 2.0 / 3.0);
  map.dxi_deta[n] = std::pow(q / std::sqrt(1.0 + 4.0 * z), 2.0 / 3.0);
  loop(n - 1, [&](std::ptrdiff_t k) {
    int i = static_cast<int>(k) + 1;
    double s = std::sqrt(std::max(1.0 - map.xi[i] * map.xi[i], 0.0));
    map.dxi_deta[i] = q * weight(z, map.eta[i]) / s;
  });

  double sup = 0.0;
  for (int i = 0; i <= n; ++i) sup = std::max(sup, std::fabs(map.xi[i] - map.eta[i]));
  map.sup_deviation = sup;
  return map;
}

}  // namespace

XiMapping xi_mapping(double z, double lambda_prime, int grid_size) {
  return xi_mapping_impl(z, lambda_prime, grid_size,
                         [](std::ptrdiff_t n, auto&& body) { parallel_for(n, body); });
}

XiMapping xi_mapping_serial(double z, double lambda_prime, int grid_size) {
  return xi_mapping_impl(z, lambda_prime, grid_size,
                         [](std::ptrdiff_t n, auto&& body) { serial_for(n, body); });
}

CorrectionReport correction_terms(const XiMapping& map, double z) {
  const int n = static_cast<int>(map.eta.size()) - 1;
  if (n < 128) throw ResolutionError("correction terms need a mapping grid of at least 128");
  const double h = 2.0 / n;

  CorrectionReport rep;
  rep.z = z;
  rep.lambda_prime = map.lambda_prime;

  auto d_xi_at = [&](int i, int stride) {
    double s = stride * h;
    double x1 = (map.xi[i + stride] - map.xi[i - stride]) / (2.0 * s);
    double x2 = (map.xi[i + stride] - 2.0 * map.xi[i] + map.xi[i - stride]) / (s * s);
    double x3 = (map.xi[i + 2 * stride] - 2.0 * map.xi[i + stride] + 2.0 * map.xi[i - stride] -
                 map.xi[i - 2 * stride]) /
                (2.0 * s * s * s);
    return 1.5 * x2 * x2 / (x1 * x1) - 0.5 * x3 / x1;
  };

  const int lo = 3, hi = n - 3;
  const int m = hi - lo + 1;
  rep.eta.resize(m);
  rep.d_xi.resize(m);
  rep.d_eta_xi.resize(m);
  rep.leading.resize(m);
  std::vector<double> correction(m, 0.0);

  parallel_for(m, [&](std::ptrdiff_t k) {
    int i = lo + static_cast<int>(k);
    double eta = map.eta[i];
    double x1 = (map.xi[i + 1] - map.xi[i - 1]) / (2.0 * h);
    double x2 = (map.xi[i + 1] - 2.0 * map.xi[i] + map.xi[i - 1]) / (h * h);
    double w = 1.0 + 4.0 * z * eta;
    rep.eta[k] = eta;
    rep.d_xi[k] = d_xi_at(i, 1);
    rep.d_eta_xi[k] = 3.0 * x2 / (2.0 * z * x1 * w) + 1.5 / w;
    rep.leading[k] =
        2.0 * std::pow(z, 4) / (map.lambda_prime * map.lambda_prime) * (1.0 - eta * eta) / w;
    correction[k] = rep.d_xi[k] + 4.0 * z * z * rep.d_eta_xi[k];
  });

  double max_ratio = 0.0;
  for (int k = 0; k < m; ++k)
    max_ratio = std::max(max_ratio, std::fabs(correction[k] / rep.leading[k]));
  rep.max_ratio = max_ratio;

  // Richardson comparison against the stride-2 stencil where it fits
  double est = 0.0, signal = 0.0;
  for (int i = std::max(lo, 4); i <= std::min(hi, n - 4); ++i) {
    double d1 = d_xi_at(i, 1);
    double d2 = d_xi_at(i, 2);
    est = std::max(est, std::fabs(d1 - d2) / 3.0);
    signal = std::max(signal, std::fabs(d1));
  }
  rep.fd_error_estimate = est;
  if (signal > 0.0 && est > 0.1 * signal)
    throw ResolutionError("finite-difference error above 10% of signal; refine the mapping grid");
  return rep;
}

std::string to_string(ValidityFlag flag) {
  switch (flag) {
    case ValidityFlag::Good: return "good";
    case ValidityFlag::Marginal: return "marginal";
    case ValidityFlag::Poor: return "poor";
  }
  return "unknown";
}

ValidityReport validity_report(double lambda_prime) {
  doublewell::ZSolution sol = doublewell::solve_z(lambda_prime);

  // resolve the steep region near eta = -1 whose width shrinks like
  // (1 - 4z)/(4z) as z approaches 1/4
  double layer = (1.0 - 4.0 * sol.z) / (4.0 * sol.z);
  int grid = 256;
  while (grid < 8192 && layer < 48.0 / grid) grid *= 2;

  XiMapping map = xi_mapping(sol.z, lambda_prime, grid);
  CorrectionReport rep = correction_terms(map, sol.z);

  ValidityReport out;
  out.lambda_prime = lambda_prime;
  out.z = sol.z;
  out.e_over_umin = sol.e_over_umin;
  out.max_correction_ratio = rep.max_ratio;
  out.grid_size = grid;
  out.flag = rep.max_ratio < 0.05   ? ValidityFlag::Good
             : rep.max_ratio < 0.2 ? ValidityFlag::Marginal
                                    : ValidityFlag::Poor;
  return out;
}

}  // namespace mgdw::diagnostics
