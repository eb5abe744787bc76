#pragma once

#include <functional>
#include <vector>

namespace mgdw::exactsolver {

enum class Backend {
  FiniteDifference,  // dense symmetric tridiagonal + Sturm bisection
  Numerov,           // shooting with parity matching at x = 0
};

struct EigenResult {
  double lambda_prime = 0.0;
  Backend backend = Backend::Numerov;
  double half_width = 0.0;  // domain is [-L, L]
  int grid_nodes = 0;
  std::vector<double> eigenvalues;  // ascending, units of hbar*omega
  std::vector<int> parities;        // +1 even, -1 odd
  double convergence_estimate = 0.0;
  // Ground eigenvector sampled on `grid` when requested.
  std::vector<double> grid;
  std::vector<double> ground_vector;
};

struct Options {
  Backend backend = Backend::Numerov;
  int grid_nodes = 4096;
  double tol = 1e-8;
  bool want_vector = false;
};

// Lowest eigenvalue of H = -(1/2) d^2/dx^2 + lambda' x^4 - x^2/2 in
// natural units. The domain half-width is chosen so the bound-state tail
// at the boundary is below 1e-12. Throws AccuracyError when refinement
// stalls above tol.
EigenResult ground_state(double lambda_prime, const Options& opt = {});

// Lowest k eigenvalues with parity labels, k <= 8.
EigenResult spectrum(double lambda_prime, int k, const Options& opt = {});

// Same machinery for an arbitrary even potential on [-L, L]; used for
// reference cases with known spectra.
EigenResult spectrum_custom(const std::function<double(double)>& v_even, double half_width,
                            int k, const Options& opt = {});

struct CrossCheck {
  EigenResult finite_difference;
  EigenResult numerov;
  double disagreement = 0.0;  // |E0_fd - E0_numerov|
};

// Run both backends on the ground state and report their disagreement.
CrossCheck cross_validate(double lambda_prime, const Options& opt = {});

// Number of eigenvalues of the symmetric tridiagonal matrix
// (diag, offdiag) strictly below sigma, by Sturm sequence count.
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& offdiag,
                      double sigma);

// Domain half-width used for the double well at a given coupling.
double domain_half_width(double lambda_prime);

}  // namespace mgdw::exactsolver
