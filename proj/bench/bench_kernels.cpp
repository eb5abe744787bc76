// Timing comparison of the OpenMP kernels against their serial reference
// implementations. The parallel paths must reproduce the serial results
// bit for bit; any mismatch is reported and fails the run.
//
// Usage: bench-kernels [--quick]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#include "mgdw/diagnostics.hpp"
#include "mgdw/doublewell.hpp"
#include "mgdw/exactsolver.hpp"
#include "mgdw/parallel.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Row {
  const char* name;
  double serial_s;
  double parallel_s;
  double max_diff;
};

void print_row(const Row& r) {
  std::printf("%-28s %10.4f s %10.4f s %8.2fx %12.3e\n", r.name, r.serial_s, r.parallel_s,
              r.serial_s / r.parallel_s, r.max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("threads available: %d\n", mgdw::max_threads());
  std::printf("%-28s %12s %12s %9s %12s\n", "kernel", "serial", "parallel", "speedup",
              "max |diff|");

  bool all_equal = true;

  // coupling sweep
  {
    const int m = quick ? 40 : 600;
    std::vector<double> lams(m);
    for (int i = 0; i < m; ++i) lams[i] = 0.002 + (0.104 - 0.002) * i / (m - 1);
    auto t0 = clock_type::now();
    auto ser = mgdw::doublewell::sweep_serial(lams);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto par = mgdw::doublewell::sweep(lams);
    double tp = seconds_since(t0);
    double diff = 0.0;
    for (int i = 0; i < m; ++i)
      if (ser[i].solution && par[i].solution)
        diff = std::max(diff,
                        std::fabs(ser[i].solution->e_over_hw - par[i].solution->e_over_hw));
    all_equal = all_equal && diff == 0.0;
    print_row({"doublewell::sweep", ts, tp, diff});
  }

  // reduced mapping grids
  {
    const int grid = quick ? 512 : 4096;
    auto s = mgdw::doublewell::solve_z(0.05);
    auto t0 = clock_type::now();
    auto ser = mgdw::diagnostics::xi_mapping_serial(s.z, 0.05, grid);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto par = mgdw::diagnostics::xi_mapping(s.z, 0.05, grid);
    double tp = seconds_since(t0);
    double diff = 0.0;
    for (size_t i = 0; i < ser.xi.size(); ++i)
      diff = std::max(diff, std::fabs(ser.xi[i] - par.xi[i]));
    all_equal = all_equal && diff == 0.0;
    print_row({"diagnostics::xi_mapping", ts, tp, diff});
  }

  // batch of oracle ground states (library calls are pure; the batch loop
  // itself is the parallel kernel here)
  {
    const int m = quick ? 3 : 10;
    std::vector<double> lams(m);
    for (int i = 0; i < m; ++i) lams[i] = 0.02 + 0.08 * i / std::max(m - 1, 1);
    mgdw::exactsolver::Options opt;
    opt.grid_nodes = quick ? 1024 : 4096;
    std::vector<double> e_ser(m), e_par(m);
    auto t0 = clock_type::now();
    mgdw::serial_for(m, [&](std::ptrdiff_t i) {
      e_ser[i] = mgdw::exactsolver::ground_state(lams[i], opt).eigenvalues.front();
    });
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    mgdw::parallel_for(m, [&](std::ptrdiff_t i) {
      e_par[i] = mgdw::exactsolver::ground_state(lams[i], opt).eigenvalues.front();
    });
    double tp = seconds_since(t0);
    double diff = 0.0;
    for (int i = 0; i < m; ++i) diff = std::max(diff, std::fabs(e_ser[i] - e_par[i]));
    all_equal = all_equal && diff == 0.0;
    print_row({"exactsolver batch", ts, tp, diff});
  }

  if (!all_equal) {
    std::fprintf(stderr, "parallel results deviate from the serial reference\n");
    return 1;
  }
  return 0;
}
