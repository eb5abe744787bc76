// Command-line front end: reproduces the ground-state comparison table
// and figure data for the quartic symmetric double well, and exposes the
// individual solvers. Emits CSV (6 significant digits) or JSON (full
// double precision).
//
// Exit codes: 0 all checks pass, 1 numeric tolerance violation,
// 2 domain or usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgdw/diagnostics.hpp"
#include "mgdw/doublewell.hpp"
#include "mgdw/errors.hpp"
#include "mgdw/exactsolver.hpp"
#include "mgdw/mgcore.hpp"
#include "mgdw/parallel.hpp"
#include "mgdw/potential.hpp"
#include "mgdw/quadrature.hpp"
#include "mgdw/reference_data.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitDomain = 2;

// ---- output helpers ---------------------------------------------------------

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw mgdw::DomainError("cannot open output file: " + path);
    f << text;
  }
};

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

json zsolution_json(const mgdw::doublewell::ZSolution& s) {
  return json{{"lambda_prime", s.lambda_prime},
              {"z", s.z},
              {"z_squared", s.z_squared},
              {"e_over_hw", s.e_over_hw},
              {"e_over_umin", s.e_over_umin},
              {"eta_integral", s.eta_integral_value},
              {"residual", s.residual},
              {"iterations", s.iterations}};
}

// ---- subcommands ------------------------------------------------------------

// Row tolerances used by the `table` status flags: z^2 within 2e-4
// (couplings 0.09 and 0.1 within 1e-3), energies within 0.02.
double z2_tolerance(double lambda_prime) { return lambda_prime < 0.0875 ? 2e-4 : 1e-3; }
constexpr double kEnergyTolerance = 0.02;

int cmd_table(const std::string& format, const Output& out, double tol, int grid) {
  const auto& ref = mgdw::reference::published_table();
  std::vector<double> lambdas;
  for (const auto& row : ref) lambdas.push_back(row.lambda_prime);

  auto rows = mgdw::doublewell::sweep(lambdas);

  bool all_ok = true;
  std::vector<std::vector<std::string>> csv_rows;
  json jrows = json::array();
  mgdw::exactsolver::Options opt;
  opt.tol = tol;
  opt.grid_nodes = grid;

  for (size_t i = 0; i < ref.size(); ++i) {
    const auto& pub = ref[i];
    if (!rows[i].solution) {
      all_ok = false;
      csv_rows.push_back({format_number(pub.lambda_prime), "", "", "", csv_cell(pub.e_exact),
                          csv_cell(pub.e_other_method), "false", "false", "false"});
      jrows.push_back(json{{"lambda_prime", pub.lambda_prime}, {"error", rows[i].error}});
      continue;
    }
    const auto& sol = *rows[i].solution;

    // a non-converging oracle marks the row rather than aborting the table
    std::optional<double> e_oracle;
    bool oracle_consistent = false;
    try {
      auto cross = mgdw::exactsolver::cross_validate(pub.lambda_prime, opt);
      e_oracle = cross.numerov.eigenvalues.front();
      oracle_consistent = cross.disagreement <= std::max(tol, 1e-6);
    } catch (const mgdw::AccuracyError&) {
    }

    bool ok_z2 = std::fabs(sol.z_squared - pub.z_squared) <= z2_tolerance(pub.lambda_prime);
    bool ok_e = std::fabs(sol.e_over_hw - pub.e_mg) <= kEnergyTolerance;
    bool ok_oracle =
        e_oracle && oracle_consistent &&
        (!pub.e_exact || std::fabs(*e_oracle - *pub.e_exact) <= kEnergyTolerance);
    all_ok = all_ok && ok_z2 && ok_e && ok_oracle;

    csv_rows.push_back({format_number(pub.lambda_prime), format_number(sol.z_squared),
                        format_number(sol.e_over_hw), csv_cell(e_oracle),
                        csv_cell(pub.e_exact), csv_cell(pub.e_other_method),
                        ok_z2 ? "true" : "false", ok_e ? "true" : "false",
                        ok_oracle ? "true" : "false"});
    jrows.push_back(json{{"lambda_prime", pub.lambda_prime},
                         {"z_squared", sol.z_squared},
                         {"e_over_hw", sol.e_over_hw},
                         {"e_oracle", e_oracle ? json(*e_oracle) : json()},
                         {"e_exact_published", pub.e_exact ? json(*pub.e_exact) : json()},
                         {"e_other_published",
                          pub.e_other_method ? json(*pub.e_other_method) : json()},
                         {"ok_z_squared", ok_z2},
                         {"ok_e_mg", ok_e},
                         {"ok_oracle", ok_oracle}});
  }

  if (format == "json") {
    out.write(json{{"rows", jrows}, {"all_ok", all_ok}}.dump(2) + "\n");
  } else {
    out.write(to_csv({"lambda_prime", "z_squared", "e_mg", "e_oracle", "e_exact_published",
                      "e_other_published", "ok_z_squared", "ok_e_mg", "ok_oracle"},
                     csv_rows));
  }
  return all_ok ? kExitOk : kExitTolerance;
}

int cmd_figure(double from, double to, double step, const std::string& format, const Output& out,
               double tol, int grid) {
  if (!(from > 0.0) || !(to >= from) || !(step > 0.0))
    throw mgdw::DomainError("figure range requires 0 < from <= to and step > 0");
  const double lam_max = mgdw::doublewell::lambda_max();

  std::vector<double> lambdas;
  bool truncated = false;
  double first_out_of_range = 0.0;
  for (double l = from; l <= to + 1e-15; l += step) {
    if (l > lam_max) {
      truncated = true;
      first_out_of_range = l;
      break;
    }
    lambdas.push_back(l);
  }

  auto rows = mgdw::doublewell::sweep(lambdas);
  const auto& ref = mgdw::reference::published_table();
  mgdw::exactsolver::Options opt;
  opt.tol = tol;
  opt.grid_nodes = grid;

  // oracle rows are independent solves
  std::vector<double> oracle_ground(lambdas.size(), 0.0);
  mgdw::parallel_for(static_cast<std::ptrdiff_t>(lambdas.size()), [&](std::ptrdiff_t i) {
    oracle_ground[i] = mgdw::exactsolver::ground_state(lambdas[i], opt).eigenvalues.front();
  });

  std::vector<std::vector<std::string>> csv_rows;
  json jrows = json::array();
  for (size_t i = 0; i < lambdas.size(); ++i) {
    double l = lambdas[i];
    double u_min = -1.0 / (16.0 * l);
    double e_over_umin_oracle = oracle_ground[i] / u_min;
    std::optional<double> ref_ratio;
    for (const auto& r : ref)
      if (std::fabs(r.lambda_prime - l) < 1e-9 && r.e_other_method)
        ref_ratio = *r.e_other_method / u_min;
    double mg_ratio = rows[i].solution ? rows[i].solution->e_over_umin : 0.0;
    csv_rows.push_back({format_number(l), format_number(mg_ratio),
                        format_number(e_over_umin_oracle), csv_cell(ref_ratio), "ok"});
    jrows.push_back(json{{"lambda_prime", l},
                         {"e_over_umin", mg_ratio},
                         {"e_over_umin_oracle", e_over_umin_oracle},
                         {"e_over_umin_other", ref_ratio ? json(*ref_ratio) : json()},
                         {"status", "ok"}});
  }
  if (truncated) {
    std::cerr << "warning: range truncated at lambda_max = " << lam_max << "\n";
    csv_rows.push_back({format_number(first_out_of_range), "", "", "", "truncated"});
    jrows.push_back(json{{"lambda_prime", first_out_of_range}, {"status", "truncated"}});
  }

  if (format == "json") {
    out.write(json{{"rows", jrows}, {"lambda_max", lam_max}}.dump(2) + "\n");
  } else {
    out.write(to_csv(
        {"lambda_prime", "e_over_umin", "e_over_umin_oracle", "e_over_umin_other", "status"},
        csv_rows));
  }
  return kExitOk;
}

int cmd_solve(double lambda, const std::string& format, const Output& out) {
  auto sol = mgdw::doublewell::solve_z(lambda);
  if (format == "csv") {
    out.write(to_csv({"lambda_prime", "z", "z_squared", "e_over_hw", "e_over_umin",
                      "eta_integral", "residual", "iterations"},
                     {{format_number(sol.lambda_prime), format_number(sol.z),
                       format_number(sol.z_squared), format_number(sol.e_over_hw),
                       format_number(sol.e_over_umin), format_number(sol.eta_integral_value),
                       format_number(sol.residual), std::to_string(sol.iterations)}}));
  } else {
    out.write(zsolution_json(sol).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_exact(double lambda, int k, double tol, int grid, const std::string& format,
              const Output& out) {
  mgdw::exactsolver::Options opt;
  opt.tol = tol;
  opt.grid_nodes = grid;
  auto cross = mgdw::exactsolver::cross_validate(lambda, opt);
  auto spec = (k > 1) ? mgdw::exactsolver::spectrum(lambda, k, opt) : cross.numerov;

  bool consistent = cross.disagreement <= std::max(tol, 1e-6);
  json j{{"lambda_prime", lambda},
         {"half_width", spec.half_width},
         {"grid_nodes", spec.grid_nodes},
         {"eigenvalues", spec.eigenvalues},
         {"parities", spec.parities},
         {"convergence_estimate", spec.convergence_estimate},
         {"backend_ground", {{"finite_difference", cross.finite_difference.eigenvalues.front()},
                             {"numerov", cross.numerov.eigenvalues.front()}}},
         {"backend_disagreement", cross.disagreement},
         {"backends_consistent", consistent}};
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
      rows.push_back({std::to_string(i), format_number(spec.eigenvalues[i]),
                      spec.parities[i] > 0 ? "even" : "odd"});
    out.write(to_csv({"index", "e_over_hw", "parity"}, rows));
  } else {
    out.write(j.dump(2) + "\n");
  }
  if (!consistent) {
    std::cerr << "error: eigensolver backends disagree by " << cross.disagreement << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_diagnose(double lambda, const std::string& format, const Output& out) {
  auto rep = mgdw::diagnostics::validity_report(lambda);
  json j{{"lambda_prime", rep.lambda_prime},
         {"z", rep.z},
         {"e_over_umin", rep.e_over_umin},
         {"max_correction_ratio", rep.max_correction_ratio},
         {"flag", mgdw::diagnostics::to_string(rep.flag)},
         {"grid_size", rep.grid_size},
         // thresholds are conventions of this library, not derived values
         {"threshold_good", 0.05},
         {"threshold_marginal", 0.2}};
  if (format == "csv") {
    out.write(to_csv({"lambda_prime", "z", "e_over_umin", "max_correction_ratio", "flag"},
                     {{format_number(rep.lambda_prime), format_number(rep.z),
                       format_number(rep.e_over_umin), format_number(rep.max_correction_ratio),
                       mgdw::diagnostics::to_string(rep.flag)}}));
  } else {
    out.write(j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_wavefunction(double lambda, int grid, const std::string& format, const Output& out) {
  auto sol = mgdw::doublewell::solve_z(lambda);
  auto params = mgdw::potential::OscillatorParams(1.0, 1.0, 1.0, lambda);
  auto v = mgdw::potential::Potential1D::quartic_double_well(params);
  auto aux = mgdw::mgcore::AuxiliaryProblem::harmonic(0);
  auto table = mgdw::mgcore::mapping_s0(v, sol.e_over_hw, aux, std::max(grid, 64));

  std::vector<double> xs(grid + 1);
  for (int i = 0; i <= grid; ++i) xs[i] = table.x1 + (table.x2 - table.x1) * i / grid;
  auto samples = mgdw::mgcore::wavefunction(v, sol.e_over_hw, aux, table, xs, true);

  if (format == "json") {
    json arr = json::array();
    for (const auto& s : samples)
      arr.push_back(json{{"x", s.x}, {"psi", s.psi}, {"near_turning_point", s.near_turning_point}});
    out.write(json{{"lambda_prime", lambda}, {"e_over_hw", sol.e_over_hw}, {"samples", arr}}
                  .dump(2) +
              "\n");
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : samples)
      rows.push_back(
          {format_number(s.x), format_number(s.psi), s.near_turning_point ? "true" : "false"});
    out.write(to_csv({"x", "psi", "near_turning_point"}, rows));
  }
  return kExitOk;
}

json error_json(const std::string& type, const std::string& message) {
  return json{{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiclassical ground state of the quartic symmetric double well"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string format = "csv";
  std::string out_path;
  double tol = 1e-8;
  int grid = 4096;
  int jobs = 0;
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--tol", tol, "Oracle convergence tolerance");
  app.add_option("--grid", grid, "Grid size for oracle / wavefunction / diagnostics");
  app.add_option("--jobs", jobs, "Worker thread cap (0 = library default)");

  auto* table = app.add_subcommand("table", "Reproduce the ground-state comparison table");

  auto* figure = app.add_subcommand("figure", "E/U_min versus coupling, as in the summary figure");
  double from = 0.01, to = 0.1, step = 0.005;
  figure->add_option("--from", from, "First coupling");
  figure->add_option("--to", to, "Last coupling");
  figure->add_option("--step", step, "Coupling increment");

  double lambda = 0.02;
  auto* solve = app.add_subcommand("solve", "Solve the reduced quantization for one coupling");
  solve->add_option("--lambda", lambda, "Dimensionless coupling")->required();

  auto* exact = app.add_subcommand("exact", "Cross-validated exact eigenvalues");
  int k = 1;
  exact->add_option("--lambda", lambda, "Dimensionless coupling")->required();
  exact->add_option("--k", k, "Number of eigenvalues")->check(CLI::Range(1, 8));

  auto* diagnose = app.add_subcommand("diagnose", "Validity analysis of the approximation");
  diagnose->add_option("--lambda", lambda, "Dimensionless coupling")->required();

  auto* wavefn = app.add_subcommand("wavefunction", "Approximate wavefunction on the right well");
  wavefn->add_option("--lambda", lambda, "Dimensionless coupling")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitDomain;
  }

  if (jobs > 0) mgdw::set_threads(jobs);
  Output out{out_path};
  // --grid means oracle nodes for table/figure/exact and sample count for
  // the wavefunction, which wants a far smaller default
  int wf_grid = app.get_option("--grid")->count() > 0 ? grid : 256;

  try {
    if (*table) return cmd_table(format, out, tol, grid);
    if (*figure) return cmd_figure(from, to, step, format, out, tol, grid);
    if (*solve) return cmd_solve(lambda, format, out);
    if (*exact) return cmd_exact(lambda, k, tol, grid, format, out);
    if (*diagnose) return cmd_diagnose(lambda, format, out);
    if (*wavefn) return cmd_wavefunction(lambda, wf_grid, format, out);
  } catch (const mgdw::AccuracyError& e) {
    if (format == "json") std::cout << error_json("accuracy", e.what()).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const mgdw::Error& e) {
    if (format == "json") std::cout << error_json("domain", e.what()).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
