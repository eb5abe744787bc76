#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mgdw/potential.hpp"

namespace mgdw::mgcore {

// Exactly solvable comparison problem: a harmonic level with quantum
// number n, squared momentum P^2(s) = hbar^2 (alpha - s^2), alpha = 2n+1,
// turning points at -sqrt(alpha) and +sqrt(alpha).
struct AuxiliaryProblem {
  int n = 0;
  double hbar = 1.0;

  static AuxiliaryProblem harmonic(int n, double hbar = 1.0);

  double alpha() const { return 2.0 * n + 1.0; }
  double s_left() const;
  double s_right() const;
  double momentum(double s) const;  // P(s), zero outside the turning points

  // Action between the auxiliary turning points: hbar * alpha * pi / 2.
  double action_total() const;
  // Closed-form partial action from s_left to s.
  double action_from_left(double s) const;
  // Inverse of action_from_left on [s_left, s_right].
  double invert_action(double action) const;

  // Unnormalized eigenfunction H_n(s) exp(-s^2/2).
  double eigenfunction(double s) const;
};

// Monotone change of variable x = x(y). `inverse_even` records that
// y(x) depends on x only through |x|, the symmetry device that lets one
// auxiliary well stand in for both wells of an even potential.
struct CoordinateTransform {
  std::function<double(double)> forward;     // x(y)
  std::function<double(double)> derivative;  // x'(y) > 0 on (y_min, y_max)
  std::function<double(double)> inverse;     // y(x)
  double y_min = 0.0;
  double y_max = 0.0;
  bool inverse_even = false;

  static CoordinateTransform identity();
  // x = x0 sqrt(y + 1/2) on y in (-1/2, inf); the inverse
  // y = (x/x0)^2 - 1/2 is an even parabola in x.
  static CoordinateTransform parabolic(double x0);
};

// Tabulated mapping s0(x) between a classically allowed interval of the
// original problem and the auxiliary turning points, fixed by matching
// partial actions.
struct MappingTable {
  std::vector<double> x;
  std::vector<double> s0;       // strictly increasing, endpoints -+sqrt(alpha)
  std::vector<double> ds0_dx;   // > 0 in the interior
  double x1 = 0.0;              // left turning point
  double x2 = 0.0;              // right turning point
  double action_residual = 0.0; // |total action - hbar alpha pi/2| before rescaling
};

struct QuantizeOptions {
  double action_tol = 1e-9;  // |action defect| <= action_tol * hbar at the root
  double quad_tol = 1e-12;
  int max_iterations = 200;
};

// Solve the action-matching condition
//   integral p dx between the two turning points = hbar alpha pi/2
// for E inside [e_lo, e_hi]. The bracket must straddle exactly one root
// and the potential must present exactly two turning points throughout.
double mg_quantize(const potential::Potential1D& v, const AuxiliaryProblem& aux, double e_lo,
                   double e_hi, const QuantizeOptions& opt = {});

// Same condition written in the transformed variable:
//   integral x'(y) p(x(y)) dy over the transformed turning points.
// Identical to mg_quantize for the identity transform. For an even
// potential with an even inverse transform, only turning points inside
// the image of the transform participate (one well stands for both).
double mg_quantize_transformed(const potential::Potential1D& v, const CoordinateTransform& t,
                               const AuxiliaryProblem& aux, double e_lo, double e_hi,
                               const QuantizeOptions& opt = {});

// The textbook rule integral p dx = hbar pi (n + 1/2), kept as a separate
// code path so the equivalence with mg_quantize can be asserted.
double wkb_quantize(const potential::Potential1D& v, int n, double e_lo, double e_hi,
                    double hbar = 1.0, const QuantizeOptions& opt = {});

// Tabulate s0 on [x1, x2] by partial-action matching. E must satisfy the
// quantization rule (validated through the action residual). For the
// quartic kind below E = 0 the right-hand well is used.
MappingTable mapping_s0(const potential::Potential1D& v, double E, const AuxiliaryProblem& aux,
                        int grid_size = 256, const QuantizeOptions& opt = {});

struct WavefunctionSample {
  double x = 0.0;
  double psi = 0.0;
  bool near_turning_point = false;  // prefactor taken from the endpoint limit
};

// psi(x) = phi_n(s0(x)) / sqrt(s0'(x)) on the given grid (all points must
// lie in [x1, x2]). Values at turning points are finite limits, flagged
// rather than rejected. Unnormalized unless `normalize` is set, in which
// case a trapezoid rule over the grid fixes the scale.
std::vector<WavefunctionSample> wavefunction(const potential::Potential1D& v, double E,
                                             const AuxiliaryProblem& aux,
                                             const MappingTable& table,
                                             std::span<const double> grid,
                                             bool normalize = false);

}  // namespace mgdw::mgcore
