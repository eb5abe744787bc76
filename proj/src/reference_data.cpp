#include "mgdw/reference_data.hpp"

namespace mgdw::reference {

const std::vector<TableRow>& published_table() {
  static const std::vector<TableRow> rows = {
      {0.010, 0.0069, -5.550, std::nullopt, std::nullopt},
      {0.020, 0.0138, -2.430, -2.43, -2.99},
      {0.025, 0.0167, -1.830, -1.82, -1.88},
      {0.030, 0.0200, -1.410, std::nullopt, std::nullopt},
      {0.035, 0.0233, -1.120, -1.12, -1.00},
      {0.040, 0.0272, -0.880, std::nullopt, std::nullopt},
      {0.050, 0.0345, -0.560, -0.63, -0.50},
      {0.060, 0.0412, -0.350, std::nullopt, std::nullopt},
      {0.070, 0.0492, -0.190, std::nullopt, std::nullopt},
      {0.075, 0.0523, -0.130, -0.30, -0.26},
      {0.080, 0.0568, -0.070, std::nullopt, std::nullopt},
      {0.085, 0.0593, -0.030, -0.23, -0.20},
      {0.090, 0.0610, -0.016, std::nullopt, std::nullopt},
      {0.100, 0.0612, -0.013, -0.15, -0.13},
  };
  return rows;
}

}  // namespace mgdw::reference
