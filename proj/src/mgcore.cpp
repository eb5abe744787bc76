#include "mgdw/mgcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mgdw/errors.hpp"
#include "mgdw/quadrature.hpp"
#include "mgdw/rootfind.hpp"

namespace mgdw::mgcore {

namespace {
constexpr double kPi = std::numbers::pi;

using potential::Potential1D;

double momentum(const Potential1D& v, double mass, double E, double x) {
  double q = 2.0 * mass * (E - v.evaluate(x));
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

// Two turning points of v at energy E, or throw. For the quartic kind
// below the barrier top the four points collapse to the right-hand well;
// by parity that well carries the full auxiliary problem.
std::pair<double, double> allowed_interval(const Potential1D& v, double E) {
  auto pts = v.turning_points(E);
  if (pts.size() == 2 && pts[0].multiplicity == 1 && pts[1].multiplicity == 1)
    return {pts[0].x, pts[1].x};
  if (v.kind() == potential::Kind::QuarticDoubleWell && pts.size() == 4)
    return {pts[2].x, pts[3].x};
  throw WrongTopologyError("expected a single classically allowed interval");
}

}  // namespace

AuxiliaryProblem AuxiliaryProblem::harmonic(int n, double hbar) {
  if (n < 0) throw DomainError("quantum number must be non-negative");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  return AuxiliaryProblem{n, hbar};
}

double AuxiliaryProblem::s_left() const { return -std::sqrt(alpha()); }
double AuxiliaryProblem::s_right() const { return std::sqrt(alpha()); }

double AuxiliaryProblem::momentum(double s) const {
  double q = alpha() - s * s;
  return q > 0.0 ? hbar * std::sqrt(q) : 0.0;
}

double AuxiliaryProblem::action_total() const { return hbar * alpha() * kPi / 2.0; }

double AuxiliaryProblem::action_from_left(double s) const {
  const double a = alpha();
  const double sa = std::sqrt(a);
  s = std::clamp(s, -sa, sa);
  return hbar * (0.5 * s * std::sqrt(std::max(a - s * s, 0.0)) +
                 0.5 * a * std::asin(s / sa) + a * kPi / 4.0);
}

double AuxiliaryProblem::invert_action(double action) const {
  const double sa = std::sqrt(alpha());
  if (action <= 0.0) return -sa;
  if (action >= action_total()) return sa;
  // Newton from the midpoint with a bisection bracket as safety net
  double lo = -sa, hi = sa, s = 0.0;
  for (int it = 0; it < 100; ++it) {
    double f = action_from_left(s) - action;
    if (std::fabs(f) < 1e-15 * hbar) return s;
    if (f > 0.0) hi = s; else lo = s;
    double df = momentum(s);  // d(action)/ds = P(s)
    double step = (df > 1e-14) ? s - f / df : 0.5 * (lo + hi);
    s = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    if (hi - lo < 4e-16 * sa) break;
  }
  return s;
}

double AuxiliaryProblem::eigenfunction(double s) const {
  // physicists' Hermite polynomial by recurrence
  double h0 = 1.0, h1 = 2.0 * s, h = (n == 0) ? h0 : h1;
  for (int k = 2; k <= n; ++k) {
    h = 2.0 * s * h1 - 2.0 * (k - 1) * h0;
    h0 = h1;
    h1 = h;
  }
  return h * std::exp(-0.5 * s * s);
}

CoordinateTransform CoordinateTransform::identity() {
  CoordinateTransform t;
  t.forward = [](double y) { return y; };
  t.derivative = [](double) { return 1.0; };
  t.inverse = [](double x) { return x; };
  t.y_min = -std::numeric_limits<double>::infinity();
  t.y_max = std::numeric_limits<double>::infinity();
  t.inverse_even = false;
  return t;
}

CoordinateTransform CoordinateTransform::parabolic(double x0) {
  if (!(x0 > 0.0)) throw DomainError("x0 must be positive");
  CoordinateTransform t;
  t.forward = [x0](double y) { return x0 * std::sqrt(y + 0.5); };
  t.derivative = [x0](double y) { return 0.5 * x0 / std::sqrt(y + 0.5); };
  t.inverse = [x0](double x) { return (x / x0) * (x / x0) - 0.5; };
  t.y_min = -0.5;
  t.y_max = std::numeric_limits<double>::infinity();
  t.inverse_even = true;
  return t;
}

namespace {

// Generic action-matching solve: find E in [e_lo, e_hi] such that
// action(E) equals the target, by bracketed bisection/secant.
double quantize_on(const std::function<double(double)>& action, double target, double e_lo,
                   double e_hi, double hbar, const QuantizeOptions& opt) {
  auto defect = [&](double E) { return action(E) - target; };
  RootOptions ropt;
  ropt.f_tol = opt.action_tol * hbar;
  ropt.x_tol = 1e-15;
  ropt.max_iterations = opt.max_iterations;
  RootResult r = solve_bracketed(defect, e_lo, e_hi, ropt);
  return r.x;
}

}  // namespace

double mg_quantize(const Potential1D& v, const AuxiliaryProblem& aux, double e_lo, double e_hi,
                   const QuantizeOptions& opt) {
  const double mass = v.mass();
  auto action = [&](double E) {
    auto pts = v.turning_points(E);
    if (pts.size() != 2 || pts[0].multiplicity != 1 || pts[1].multiplicity != 1)
      throw WrongTopologyError("mg_quantize requires exactly two turning points");
    auto p = [&](double x) { return momentum(v, mass, E, x); };
    return quadrature::action_integral(p, pts[0].x, pts[1].x, opt.quad_tol);
  };
  return quantize_on(action, aux.action_total(), e_lo, e_hi, aux.hbar, opt);
}

double mg_quantize_transformed(const Potential1D& v, const CoordinateTransform& t,
                               const AuxiliaryProblem& aux, double e_lo, double e_hi,
                               const QuantizeOptions& opt) {
  const double mass = v.mass();
  auto action = [&](double E) {
    auto pts = v.turning_points(E);
    // keep turning points lying in the image of the transform
    std::vector<double> ys;
    for (const auto& tp : pts) {
      double y = t.inverse(tp.x);
      if (!(y > t.y_min && y < t.y_max)) continue;
      if (std::fabs(t.forward(y) - tp.x) > 1e-9 * (1.0 + std::fabs(tp.x))) continue;
      ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    if (ys.size() != 2)
      throw WrongTopologyError("transformed problem must have exactly two turning points");
    const double y1 = ys[0], y2 = ys[1];
    // the transform must be monotone across the integration range
    for (int i = 0; i <= 32; ++i) {
      double y = y1 + (y2 - y1) * i / 32.0;
      if (!(t.derivative(y) > 0.0)) throw TransformError("transform is not monotone");
    }
    auto weighted = [&](double y) { return t.derivative(y) * momentum(v, mass, E, t.forward(y)); };
    return quadrature::action_integral(weighted, y1, y2, opt.quad_tol);
  };
  return quantize_on(action, aux.action_total(), e_lo, e_hi, aux.hbar, opt);
}

double wkb_quantize(const Potential1D& v, int n, double e_lo, double e_hi, double hbar,
                    const QuantizeOptions& opt) {
  if (n < 0) throw DomainError("quantum number must be non-negative");
  const double mass = v.mass();
  auto action = [&](double E) {
    auto pts = v.turning_points(E);
    if (pts.size() != 2) throw WrongTopologyError("wkb_quantize requires two turning points");
    auto p = [&](double x) { return momentum(v, mass, E, x); };
    return quadrature::action_integral(p, pts[0].x, pts[1].x, opt.quad_tol);
  };
  return quantize_on(action, hbar * kPi * (n + 0.5), e_lo, e_hi, hbar, opt);
}

MappingTable mapping_s0(const Potential1D& v, double E, const AuxiliaryProblem& aux,
                        int grid_size, const QuantizeOptions& opt) {
  if (grid_size < 2) throw DomainError("mapping grid needs at least 2 intervals");
  const double mass = v.mass();
  auto [x1, x2] = allowed_interval(v, E);
  auto p = [&](double x) { return momentum(v, mass, E, x); };

  MappingTable table;
  table.x1 = x1;
  table.x2 = x2;
  const int n = grid_size;
  table.x.resize(n + 1);
  table.s0.resize(n + 1);
  table.ds0_dx.resize(n + 1);
  for (int i = 0; i <= n; ++i) table.x[i] = x1 + (x2 - x1) * i / n;

  // cumulative partial actions, panel by panel; the sqrt endpoint panels
  // get the matching substitution
  std::vector<double> sigma(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) {
    quadrature::IntegrandSpec spec;
    spec.f = p;
    spec.a = table.x[i - 1];
    spec.b = table.x[i];
    spec.endpoints = (i == 1) ? quadrature::Endpoints::SqrtVanishingLeft
                   : (i == n) ? quadrature::Endpoints::SqrtVanishingRight
                              : quadrature::Endpoints::Smooth;
    spec.abs_tol = opt.quad_tol / n;
    sigma[i] = sigma[i - 1] + quadrature::integrate(spec).value;
  }

  table.action_residual = std::fabs(sigma[n] - aux.action_total());
  if (table.action_residual > 1e-6 * aux.hbar * aux.alpha())
    throw QuantizationViolatedError(
        "energy does not satisfy the quantization rule; mapping endpoints would not match");

  // rescale so the final partial action lands exactly on the auxiliary
  // total: boundary conditions hold by construction
  const double scale = aux.action_total() / sigma[n];
  table.s0[0] = aux.s_left();
  table.s0[n] = aux.s_right();
  for (int i = 1; i < n; ++i) table.s0[i] = aux.invert_action(sigma[i] * scale);

  // derivative from P(s0) s0' = p(x); endpoint values from the limit
  // s0'^3 = m |v'(x_tp)| / (hbar^2 sqrt(alpha))
  auto endpoint_slope = [&](double x_tp) {
    double dv = std::fabs(v.derivative(x_tp));
    return std::cbrt(mass * dv / (aux.hbar * aux.hbar * std::sqrt(aux.alpha())));
  };
  table.ds0_dx[0] = endpoint_slope(x1);
  table.ds0_dx[n] = endpoint_slope(x2);
  for (int i = 1; i < n; ++i) {
    double P = aux.momentum(table.s0[i]);
    table.ds0_dx[i] = (P > 0.0) ? p(table.x[i]) / P : endpoint_slope(table.x[i]);
  }
  return table;
}

std::vector<WavefunctionSample> wavefunction(const Potential1D& v, double E,
                                             const AuxiliaryProblem& aux,
                                             const MappingTable& table,
                                             std::span<const double> grid, bool normalize) {
  const double mass = v.mass();
  const double span = table.x2 - table.x1;
  auto p = [&](double x) { return momentum(v, mass, E, x); };
  auto endpoint_slope = [&](double x_tp) {
    double dv = std::fabs(v.derivative(x_tp));
    return std::cbrt(mass * dv / (aux.hbar * aux.hbar * std::sqrt(aux.alpha())));
  };

  std::vector<WavefunctionSample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    if (x < table.x1 - 1e-12 * span || x > table.x2 + 1e-12 * span)
      throw DomainError("wavefunction grid point outside the allowed interval");
    x = std::clamp(x, table.x1, table.x2);

    // locate the nearest tabulated node at or below x, then close the gap
    // with one short partial-action panel; this keeps s0 at quadrature
    // accuracy for grid points between table nodes
    size_t k = std::upper_bound(table.x.begin(), table.x.end(), x) - table.x.begin();
    if (k > 0) --k;
    double action_at_node = aux.action_from_left(table.s0[k]);
    double s;
    if (x == table.x[k]) {
      s = table.s0[k];
    } else {
      quadrature::IntegrandSpec spec;
      spec.f = p;
      spec.a = table.x[k];
      spec.b = x;
      spec.endpoints = (k == 0) ? quadrature::Endpoints::SqrtVanishingLeft
                                : quadrature::Endpoints::Smooth;
      spec.abs_tol = 1e-12;
      s = aux.invert_action(action_at_node + quadrature::integrate(spec).value);
    }

    WavefunctionSample sample;
    sample.x = x;
    double P = aux.momentum(s);
    double px = p(x);
    double slope;
    if (P < 1e-8 * aux.hbar || px < 1e-10) {
      slope = endpoint_slope(x <= 0.5 * (table.x1 + table.x2) ? table.x1 : table.x2);
      sample.near_turning_point = true;
    } else {
      slope = px / P;
    }
    sample.psi = aux.eigenfunction(s) / std::sqrt(slope);
    out.push_back(sample);
  }

  if (normalize && out.size() >= 2) {
    double norm = 0.0;
    for (size_t i = 1; i < out.size(); ++i) {
      double dx = out[i].x - out[i - 1].x;
      norm += 0.5 * dx * (out[i].psi * out[i].psi + out[i - 1].psi * out[i - 1].psi);
    }
    if (norm > 0.0) {
      double inv = 1.0 / std::sqrt(norm);
      for (auto& s : out) s.psi *= inv;
    }
  }
  return out;
}

}  // namespace mgdw::mgcore
