#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mgdw::doublewell {

// Solved quantization root for the reduced double-well problem. The
// classically allowed region of one well spans y in [-2z, 2z]; bound
// states below the barrier require 0 < z < 1/4.
struct ZSolution {
  double lambda_prime = 0.0;
  double z = 0.0;
  double z_squared = 0.0;          // stored so that e_over_hw * lambda' + 1/16 == z_squared
  double e_over_hw = 0.0;          // (z^2 - 1/16) / lambda'
  double e_over_umin = 0.0;        // 1 - 16 z^2
  double eta_integral_value = 0.0; // I(z) at the root
  double residual = 0.0;           // |pi/2 - sqrt(2) (z^2/lambda') I(z)|
  int iterations = 0;
};

struct SweepRow {
  double lambda_prime = 0.0;
  std::optional<ZSolution> solution;
  std::string error;  // empty on success
};

// I(z) = integral_{-1}^{1} sqrt((1 - eta^2) / (1 + 4 z eta)) d eta,
// strictly increasing on [0, 1/4], finite at z = 1/4. Throws DomainError
// outside [0, 1/4].
double eta_integral(double z, double abs_tol = 1e-12);

// Largest coupling with a negative-energy ground state: the value of
// lambda' at which z = 1/4 and E = 0. Evaluated once from I(1/4).
double lambda_max();

// Solve sqrt(2) (z^2 / lambda') I(z) = pi/2 for the unique z in (0, 1/4].
// Throws NoBoundStateError for lambda' > lambda_max(), DomainError for
// lambda' <= 0.
ZSolution solve_z(double lambda_prime, double residual_tol = 1e-12);

// Ground-state energy in the two normalizations used for reporting.
struct GroundEnergy {
  double e_over_hw = 0.0;
  double e_over_umin = 0.0;
};
GroundEnergy ground_energy(double lambda_prime);

// One ZSolution per coupling; failures are collected per row, never fatal.
// Rows are independent and the output is ordered like the input
// regardless of how the work is scheduled.
std::vector<SweepRow> sweep(const std::vector<double>& lambda_primes);
std::vector<SweepRow> sweep_serial(const std::vector<double>& lambda_primes);

}  // namespace mgdw::doublewell
