#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mgdw::potential {

// Physical parameters of the quartic oscillator family
//   v(x) = coupling * x^4 - (mass * omega^2 / 2) * x^2
// together with the derived dimensionless quantities that control the
// reduced problem. All four inputs must be strictly positive.
struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double coupling = 1.0;

  OscillatorParams(double m, double w, double hb, double lam);

  // hbar * coupling / (mass^2 * omega^3); invariant under any scaling that
  // preserves this combination.
  double lambda_prime() const;

  // Half-distance parameter of the wells: x0^2 = mass * omega^2 / (2 coupling).
  double x0() const;

  // Well depth: -hbar * omega / (16 lambda') = -mass^2 omega^4 / (16 coupling).
  double u_min() const;
};

double to_dimensionless(const OscillatorParams& params);
double u_min(const OscillatorParams& params);

enum class Kind { QuarticDoubleWell, Harmonic, Custom };

struct TurningPoint {
  double x = 0.0;
  int multiplicity = 1;
};

// A closed-form one-dimensional potential with an evaluation domain.
// Quartic and harmonic kinds evaluate from their parameters exactly;
// Custom wraps an arbitrary callable.
class Potential1D {
public:
  static Potential1D quartic_double_well(const OscillatorParams& params);
  static Potential1D harmonic(double mass, double omega);
  static Potential1D custom(std::function<double(double)> f, double x_min, double x_max,
                            std::string name = "custom");

  double evaluate(double x) const;
  double derivative(double x) const;  // analytic for closed forms, central FD for Custom

  // All real solutions of v(x) = E, ascending. For the quartic kind with
  // u_min < E < 0 this is the closed-form four-point set; a double root
  // (E exactly at a stationary value) is reported once with multiplicity 2.
  std::vector<TurningPoint> turning_points(double energy) const;

  Kind kind() const { return kind_; }
  double mass() const { return mass_; }  // 1 for Custom (natural units)
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  bool in_domain(double x) const { return x >= x_min_ && x <= x_max_; }
  OscillatorParams params() const;  // quartic kind only

private:
  Potential1D() = default;

  Kind kind_ = Kind::Custom;
  double x_min_ = 0.0;
  double x_max_ = 0.0;
  // quartic/harmonic parameters
  double mass_ = 1.0;
  double omega_ = 1.0;
  double hbar_ = 1.0;
  double coupling_ = 1.0;
  std::function<double(double)> custom_;
  std::string name_;

  std::vector<TurningPoint> quartic_turning_points(double energy) const;
  std::vector<TurningPoint> harmonic_turning_points(double energy) const;
  std::vector<TurningPoint> scan_turning_points(double energy) const;
};

}  // namespace mgdw::potential
