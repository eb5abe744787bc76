#include "mgdw/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgdw/errors.hpp"
#include "mgdw/rootfind.hpp"

namespace mgdw::potential {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

OscillatorParams::OscillatorParams(double m, double w, double hb, double lam)
    : mass(m), omega(w), hbar(hb), coupling(lam) {
  if (!(m > 0.0) || !(w > 0.0) || !(hb > 0.0) || !(lam > 0.0))
    throw DomainError("oscillator parameters must be strictly positive");
}

double OscillatorParams::lambda_prime() const {
  return hbar * coupling / (mass * mass * omega * omega * omega);
}

double OscillatorParams::x0() const { return std::sqrt(mass * omega * omega / (2.0 * coupling)); }

double OscillatorParams::u_min() const { return -hbar * omega / (16.0 * lambda_prime()); }

double to_dimensionless(const OscillatorParams& params) { return params.lambda_prime(); }

double u_min(const OscillatorParams& params) { return params.u_min(); }

Potential1D Potential1D::quartic_double_well(const OscillatorParams& params) {
  Potential1D v;
  v.kind_ = Kind::QuarticDoubleWell;
  v.mass_ = params.mass;
  v.omega_ = params.omega;
  v.hbar_ = params.hbar;
  v.coupling_ = params.coupling;
  v.x_min_ = -kInf;
  v.x_max_ = kInf;
  v.name_ = "quartic-double-well";
  return v;
}

Potential1D Potential1D::harmonic(double mass, double omega) {
  if (!(mass > 0.0) || !(omega > 0.0)) throw DomainError("mass and omega must be positive");
  Potential1D v;
  v.kind_ = Kind::Harmonic;
  v.mass_ = mass;
  v.omega_ = omega;
  v.x_min_ = -kInf;
  v.x_max_ = kInf;
  v.name_ = "harmonic";
  return v;
}

Potential1D Potential1D::custom(std::function<double(double)> f, double x_min, double x_max,
                                std::string name) {
  if (!(x_min < x_max)) throw DomainError("custom potential requires x_min < x_max");
  Potential1D v;
  v.kind_ = Kind::Custom;
  v.custom_ = std::move(f);
  v.x_min_ = x_min;
  v.x_max_ = x_max;
  v.name_ = std::move(name);
  return v;
}

OscillatorParams Potential1D::params() const {
  if (kind_ != Kind::QuarticDoubleWell)
    throw DomainError("oscillator parameters only defined for the quartic kind");
  return OscillatorParams(mass_, omega_, hbar_, coupling_);
}

double Potential1D::evaluate(double x) const {
  if (!in_domain(x)) throw DomainError("evaluation point outside potential domain");
  switch (kind_) {
    case Kind::QuarticDoubleWell:
      return coupling_ * x * x * x * x - 0.5 * mass_ * omega_ * omega_ * x * x;
    case Kind::Harmonic:
      return 0.5 * mass_ * omega_ * omega_ * x * x;
    case Kind::Custom: {
      double v = custom_(x);
      if (!std::isfinite(v)) throw IntegrandError("custom potential sample is not finite");
      return v;
    }
  }
  return 0.0;
}

double Potential1D::derivative(double x) const {
  switch (kind_) {
    case Kind::QuarticDoubleWell:
      return 4.0 * coupling_ * x * x * x - mass_ * omega_ * omega_ * x;
    case Kind::Harmonic:
      return mass_ * omega_ * omega_ * x;
    case Kind::Custom: {
      double h = 1e-6 * (1.0 + std::fabs(x));
      double lo = std::max(x - h, x_min_), hi = std::min(x + h, x_max_);
      return (evaluate(hi) - evaluate(lo)) / (hi - lo);
    }
  }
  return 0.0;
}

std::vector<TurningPoint> Potential1D::turning_points(double energy) const {
  switch (kind_) {
    case Kind::QuarticDoubleWell:
      return quartic_turning_points(energy);
    case Kind::Harmonic:
      return harmonic_turning_points(energy);
    case Kind::Custom:
      return scan_turning_points(energy);
  }
  return {};
}

std::vector<TurningPoint> Potential1D::quartic_turning_points(double energy) const {
  const double a = 0.5 * mass_ * omega_ * omega_;  // v = coupling x^4 - a x^2
  const double depth = -a * a / (4.0 * coupling_);  // u_min
  if (energy <= depth) throw NoTurningPointsError("energy at or below the well bottoms");

  // quadratic in u = x^2: coupling u^2 - a u - E = 0
  const double disc = a * a + 4.0 * coupling_ * energy;
  const double sq = std::sqrt(std::max(disc, 0.0));
  const double u_plus = (a + sq) / (2.0 * coupling_);
  const double u_minus = (a - sq) / (2.0 * coupling_);

  std::vector<TurningPoint> pts;
  auto polish = [&](double x) {
    // one Newton step on v(x) - E guards against cancellation near the bottoms
    double d = derivative(x);
    if (std::fabs(d) > 1e-10 * (1.0 + std::fabs(energy))) x -= (evaluate(x) - energy) / d;
    return x;
  };

  if (u_minus > 0.0) {
    double xi = polish(std::sqrt(u_minus));
    double xo = polish(std::sqrt(u_plus));
    pts = {{-xo, 1}, {-xi, 1}, {xi, 1}, {xo, 1}};
  } else if (u_minus == 0.0) {
    // E = 0 exactly: double root of v(x) = E at the origin
    double xo = polish(std::sqrt(u_plus));
    pts = {{-xo, 1}, {0.0, 2}, {xo, 1}};
  } else {
    double xo = polish(std::sqrt(u_plus));
    pts = {{-xo, 1}, {xo, 1}};
  }
  return pts;
}

std::vector<TurningPoint> Potential1D::harmonic_turning_points(double energy) const {
  if (energy <= 0.0) throw NoTurningPointsError("harmonic well requires positive energy");
  double x = std::sqrt(2.0 * energy / (mass_ * omega_ * omega_));
  return {{-x, 1}, {x, 1}};
}

std::vector<TurningPoint> Potential1D::scan_turning_points(double energy) const {
  constexpr int kScan = 4096;
  std::vector<TurningPoint> pts;
  double prev_x = x_min_;
  double prev_f = evaluate(prev_x) - energy;
  for (int i = 1; i <= kScan; ++i) {
    double x = x_min_ + (x_max_ - x_min_) * i / kScan;
    double fx = evaluate(x) - energy;
    if (prev_f == 0.0) {
      pts.push_back({prev_x, 1});
    } else if ((prev_f < 0.0) != (fx < 0.0)) {
      auto r = solve_bracketed([&](double t) { return evaluate(t) - energy; }, prev_x, x);
      pts.push_back({r.x, 1});
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0.0) pts.push_back({prev_x, 1});
  if (pts.empty()) throw NoTurningPointsError("energy does not intersect the potential");
  std::sort(pts.begin(), pts.end(), [](auto& l, auto& r) { return l.x < r.x; });
  return pts;
}

}  // namespace mgdw::potential
