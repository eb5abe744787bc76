#pragma once

#include <string>
#include <vector>

namespace mgdw::diagnostics {

// Reduced mapping xi(eta) for one well, solved through partial-action
// matching so both boundary conditions hold by construction.
struct XiMapping {
  double z = 0.0;
  double lambda_prime = 0.0;
  std::vector<double> eta;       // uniform grid on [-1, 1]
  std::vector<double> xi;        // strictly increasing, xi(-1) = -1, xi(1) = 1
  std::vector<double> dxi_deta;  // > 0 everywhere (endpoint values are limits)
  double sup_deviation = 0.0;    // sup |xi - eta| over the grid
};

// Requires grid_size >= 64 and a (z, lambda') pair that satisfies the
// quantization condition (InconsistentParametersError otherwise).
XiMapping xi_mapping(double z, double lambda_prime, int grid_size = 256);
XiMapping xi_mapping_serial(double z, double lambda_prime, int grid_size = 256);

// Size of the terms dropped by the zero-order approximation, sampled on
// the interior grid (3 nodes excluded at each end). Derivatives of xi are
// centered finite differences on the mapping grid.
struct CorrectionReport {
  double z = 0.0;
  double lambda_prime = 0.0;
  std::vector<double> eta;
  std::vector<double> d_xi;       // (3/2) xi''^2/xi'^2 - (1/2) xi'''/xi'
  std::vector<double> d_eta_xi;   // 3 xi''/(2 z xi' (1+4z eta)) + 3/(2(1+4z eta))
  std::vector<double> leading;    // 2 z^4/lambda'^2 (1-eta^2)/(1+4z eta)
  double max_ratio = 0.0;         // max |(d_xi + 4 z^2 d_eta_xi)/leading|
  double fd_error_estimate = 0.0; // Richardson estimate, spacing h vs 2h
};

// Requires a uniform mapping grid with >= 128 intervals; throws
// ResolutionError when the finite-difference error estimate exceeds 10%
// of the signal.
CorrectionReport correction_terms(const XiMapping& map, double z);

enum class ValidityFlag { Good, Marginal, Poor };
std::string to_string(ValidityFlag flag);

// Qualitative assessment of the approximation at one coupling. The
// thresholds (good < 0.05, marginal < 0.2) are conventions of this
// library, not derived quantities.
struct ValidityReport {
  double lambda_prime = 0.0;
  double z = 0.0;
  double e_over_umin = 0.0;
  double max_correction_ratio = 0.0;
  ValidityFlag flag = ValidityFlag::Poor;
  int grid_size = 0;
};

ValidityReport validity_report(double lambda_prime);

}  // namespace mgdw::diagnostics
