#pragma once

#include <optional>
#include <vector>

namespace mgdw::reference {

// Published comparison values for the quartic double-well ground state,
// keyed by the dimensionless coupling. Cells the source leaves blank are
// nullopt. These are carried verbatim for comparison output and are never
// recomputed.
struct TableRow {
  double lambda_prime = 0.0;
  double z_squared = 0.0;
  double e_mg = 0.0;                       // semiclassical value as published
  std::optional<double> e_exact;           // published exact eigenvalue
  std::optional<double> e_other_method;    // published competing approximation
};

inline constexpr int kTableVersion = 1;

const std::vector<TableRow>& published_table();

}  // namespace mgdw::reference
