#include "mgdw/exactsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgdw/errors.hpp"

namespace mgdw::exactsolver {

namespace {

double well(double lambda_prime, double x) {
  return lambda_prime * x * x * x * x - 0.5 * x * x;
}

// WKB decay exponent of the tail between the outer classical region and L.
double decay_exponent(const std::function<double(double)>& v, double from, double to) {
  const int m = 512;
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    double x = from + (to - from) * (i + 0.5) / m;
    double q = 2.0 * v(x);
    if (q > 0.0) s += std::sqrt(q) * (to - from) / m;
  }
  return s;
}

// ---- finite-difference backend -------------------------------------------

struct Tridiag {
  std::vector<double> diag;
  double off = 0.0;  // constant off-diagonal
};

Tridiag build_matrix(const std::function<double(double)>& v, double L, int n) {
  // interior nodes of [-L, L] with Dirichlet ends; 3-point Laplacian
  double h = 2.0 * L / n;
  Tridiag t;
  t.diag.resize(n - 1);
  t.off = -0.5 / (h * h);
  for (int j = 1; j < n; ++j) t.diag[j - 1] = 1.0 / (h * h) + v(-L + j * h);
  return t;
}

int count_below(const Tridiag& t, double sigma) {
  int count = 0;
  double q = 1.0;
  const double e2 = t.off * t.off;
  for (size_t j = 0; j < t.diag.size(); ++j) {
    double d = t.diag[j] - sigma;
    q = (j == 0) ? d : d - e2 / q;
    if (q == 0.0) q = 1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

// m-th smallest eigenvalue (m >= 1) by bisection on the Sturm count.
double sturm_eigenvalue(const Tridiag& t, int m) {
  double dmin = *std::min_element(t.diag.begin(), t.diag.end());
  double dmax = *std::max_element(t.diag.begin(), t.diag.end());
  double lo = dmin - 2.0 * std::fabs(t.off);
  double hi = dmax + 2.0 * std::fabs(t.off);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (count_below(t, mid) >= m) hi = mid; else lo = mid;
    if (hi - lo < 1e-13 * (1.0 + std::fabs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

// Inverse iteration for the eigenvector of a tridiagonal matrix near mu.
std::vector<double> inverse_iteration(const Tridiag& t, double mu) {
  const size_t m = t.diag.size();
  std::vector<double> w(m, 1.0);
  // slightly detuned shift keeps the factorization well-defined
  double shift = mu + 1e-11 * (1.0 + std::fabs(mu));
  for (int sweep = 0; sweep < 4; ++sweep) {
    // Thomas solve (T - shift I) x = w
    std::vector<double> c(m), d(m);
    double denom = t.diag[0] - shift;
    if (std::fabs(denom) < 1e-300) denom = 1e-300;
    c[0] = t.off / denom;
    d[0] = w[0] / denom;
    for (size_t j = 1; j < m; ++j) {
      denom = (t.diag[j] - shift) - t.off * c[j - 1];
      if (std::fabs(denom) < 1e-300) denom = 1e-300;
      c[j] = t.off / denom;
      d[j] = (w[j] - t.off * d[j - 1]) / denom;
    }
    w[m - 1] = d[m - 1];
    for (size_t j = m - 1; j-- > 0;) w[j] = d[j] - c[j] * w[j + 1];
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : w) x /= norm;
  }
  // fix overall sign so the midpoint is non-negative
  if (w[m / 2] < 0.0)
    for (double& x : w) x = -x;
  return w;
}

double fd_eigenvalue(const std::function<double(double)>& v, double L, int n, int m) {
  return sturm_eigenvalue(build_matrix(v, L, n), m);
}

// ---- Numerov backend -------------------------------------------------------

// Integrate inward from x = L to 0 on n steps and return the parity defect
// at the origin (even: symmetric three-term relation with psi(-h) = psi(h);
// odd: psi(0) itself). Optionally counts interior sign changes on (0, L)
// and captures the half-line solution.
struct NumerovShot {
  double defect = 0.0;
  int nodes = 0;
  std::vector<double> psi;  // psi[i] at x = i*h when captured
};

NumerovShot numerov_shoot(const std::function<double(double)>& v, double L, int n, double E,
                          bool even, bool capture = false) {
  const double h = L / n;
  auto tfac = [&](double x) { return h * h * 2.0 * (E - v(x)) / 12.0; };
  NumerovShot shot;
  if (capture) shot.psi.assign(n + 1, 0.0);
  double prev = 0.0;        // psi at x_{i+1}
  double cur = 1e-120;      // psi at x_i, seeded in the far tail
  double t_prev = tfac(L);
  double t_cur = tfac(L - h);
  if (capture) {
    shot.psi[n] = prev;
    shot.psi[n - 1] = cur;
  }
  for (int i = n - 2; i >= 0; --i) {
    double x = i * h;
    double t_next = tfac(x);
    double next = ((2.0 - 10.0 * t_cur) * cur - (1.0 + t_prev) * prev) / (1.0 + t_next);
    if ((next < 0.0 && cur > 0.0) || (next > 0.0 && cur < 0.0)) shot.nodes++;
    prev = cur;
    t_prev = t_cur;
    cur = next;
    t_cur = t_next;
    if (capture) shot.psi[i] = cur;
    if (std::fabs(cur) > 1e100) {
      prev *= 1e-100;
      cur *= 1e-100;
      if (capture)
        for (int j = i; j <= n; ++j) shot.psi[j] *= 1e-100;
    }
  }
  // cur = psi(0), prev = psi(h)
  if (even)
    shot.defect = 2.0 * prev * (1.0 + t_prev) - cur * (2.0 - 10.0 * t_cur);
  else
    shot.defect = cur;
  return shot;
}

struct NumerovRoot {
  double energy = 0.0;
  int parity = +1;
  int nodes = 0;
};

// Collect the lowest eigenvalues of one parity class by scanning the defect
// for sign changes and bisecting each.
void numerov_collect(const std::function<double(double)>& v, double L, int n, bool even,
                     double e_floor, double e_cap, double step, int wanted,
                     std::vector<NumerovRoot>& out) {
  double e_prev = e_floor;
  double f_prev = numerov_shoot(v, L, n, e_prev, even).defect;
  int found = 0;
  for (double e = e_floor + step; e <= e_cap && found < wanted; e += step) {
    double f = numerov_shoot(v, L, n, e, even).defect;
    if ((f_prev < 0.0) != (f < 0.0)) {
      double lo = e_prev, hi = e, flo = f_prev;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = numerov_shoot(v, L, n, mid, even).defect;
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-14 * (1.0 + std::fabs(lo))) break;
      }
      double root = 0.5 * (lo + hi);
      NumerovShot shot = numerov_shoot(v, L, n, root, even);
      out.push_back({root, even ? +1 : -1, shot.nodes});
      ++found;
    }
    e_prev = e;
    f_prev = f;
  }
}

std::vector<NumerovRoot> numerov_lowest(const std::function<double(double)>& v, double L, int n,
                                        int k, double e_floor) {
  // Scan with a step small enough not to skip same-parity neighbors; the
  // cap is raised until both parity classes yield enough roots.
  double e_cap = e_floor + 2.0;
  const double step = 0.02;
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<NumerovRoot> roots;
    numerov_collect(v, L, n, true, e_floor, e_cap, step, k, roots);
    numerov_collect(v, L, n, false, e_floor, e_cap, step, k, roots);
    std::sort(roots.begin(), roots.end(),
              [](const NumerovRoot& a, const NumerovRoot& b) { return a.energy < b.energy; });
    if (static_cast<int>(roots.size()) >= k) {
      roots.resize(k);
      return roots;
    }
    e_cap = e_floor + (e_cap - e_floor) * 2.0;
  }
  throw AccuracyError("Numerov scan failed to locate the requested eigenvalues", 0.0, 0.0);
}

// ---- shared driver ----------------------------------------------------------

EigenResult solve(const std::function<double(double)>& v, double lambda_prime, double L, int k,
                  const Options& opt, double e_floor) {
  if (k < 1 || k > 8) throw DomainError("spectrum supports 1 <= k <= 8");
  if (opt.tol < 1e-14) throw DomainError("tolerance too small for double precision");

  EigenResult res;
  res.lambda_prime = lambda_prime;
  res.backend = opt.backend;
  res.half_width = L;

  int n = opt.grid_nodes;
  const int n_max = 16384;
  for (;; n = std::min(2 * n, n_max)) {
    res.grid_nodes = n;
    res.eigenvalues.clear();
    res.parities.clear();
    if (opt.backend == Backend::FiniteDifference) {
      // h^2 Richardson extrapolation; the change between the two
      // extrapolants is the convergence estimate for the finer one
      res.convergence_estimate = 0.0;
      for (int m = 1; m <= k; ++m) {
        double e_q = fd_eigenvalue(v, L, n / 4, m);
        double e_h = fd_eigenvalue(v, L, n / 2, m);
        double e_f = fd_eigenvalue(v, L, n, m);
        double extrap_coarse = e_h + (e_h - e_q) / 3.0;
        double extrap_fine = e_f + (e_f - e_h) / 3.0;
        res.eigenvalues.push_back(extrap_fine);
        res.parities.push_back(m % 2 == 1 ? +1 : -1);
        res.convergence_estimate =
            std::max(res.convergence_estimate, std::fabs(extrap_fine - extrap_coarse));
      }
    } else {
      std::vector<NumerovRoot> coarse = numerov_lowest(v, L, n / 2, k, e_floor);
      std::vector<NumerovRoot> fine = numerov_lowest(v, L, n, k, e_floor);
      res.convergence_estimate = 0.0;
      for (int m = 0; m < k; ++m) {
        res.eigenvalues.push_back(fine[m].energy);
        res.parities.push_back(fine[m].parity);
        res.convergence_estimate =
            std::max(res.convergence_estimate, std::fabs(fine[m].energy - coarse[m].energy));
      }
    }
    if (res.convergence_estimate <= opt.tol || n >= n_max) break;
  }
  if (res.convergence_estimate > opt.tol)
    throw AccuracyError("eigensolver did not converge to the requested tolerance",
                        res.eigenvalues.empty() ? 0.0 : res.eigenvalues.front(),
                        res.convergence_estimate);

  if (opt.want_vector) {
    if (opt.backend == Backend::FiniteDifference) {
      Tridiag t = build_matrix(v, L, n);
      // eigenvector of the plain (unextrapolated) discrete operator
      double e_disc = sturm_eigenvalue(t, 1);
      std::vector<double> w = inverse_iteration(t, e_disc);
      double h = 2.0 * L / n;
      res.grid.resize(w.size());
      for (size_t j = 0; j < w.size(); ++j) res.grid[j] = -L + (j + 1) * h;
      res.ground_vector = std::move(w);
    } else {
      NumerovShot shot = numerov_shoot(v, L, n, res.eigenvalues.front(), true, true);
      // assemble the even ground state on the full grid from the half line
      double h = L / n;
      res.grid.resize(2 * n + 1);
      res.ground_vector.resize(2 * n + 1);
      double norm = 0.0;
      for (int i = 0; i <= 2 * n; ++i) {
        int idx = std::abs(i - n);
        res.grid[i] = (i - n) * h;
        res.ground_vector[i] = shot.psi[idx];
        norm += shot.psi[idx] * shot.psi[idx] * h;
      }
      norm = std::sqrt(norm);
      for (double& a : res.ground_vector) a /= norm;
    }
  }
  return res;
}

}  // namespace

double domain_half_width(double lambda_prime) {
  if (!(lambda_prime > 0.0)) throw DomainError("lambda' must be positive");
  double x_zero = std::sqrt(1.0 / (2.0 * lambda_prime));  // outer turning point at E = 0
  auto v = [lambda_prime](double x) { return well(lambda_prime, x); };
  double L = 1.5 * x_zero;
  // extend until the WKB tail at the wall is below ~1e-12
  while (decay_exponent(v, x_zero, L) < 28.0) L *= 1.15;
  return L;
}

EigenResult ground_state(double lambda_prime, const Options& opt) {
  return spectrum(lambda_prime, 1, opt);
}

EigenResult spectrum(double lambda_prime, int k, const Options& opt) {
  if (!(lambda_prime > 0.0)) throw DomainError("lambda' must be positive");
  double L = domain_half_width(lambda_prime);
  auto v = [lambda_prime](double x) { return well(lambda_prime, x); };
  double e_floor = -1.0 / (16.0 * lambda_prime) + 1e-9;
  return solve(v, lambda_prime, L, k, opt, e_floor);
}

EigenResult spectrum_custom(const std::function<double(double)>& v_even, double half_width, int k,
                            const Options& opt) {
  double e_floor = v_even(0.0);
  for (int i = 0; i <= 64; ++i)
    e_floor = std::min(e_floor, v_even(half_width * i / 64.0));
  return solve(v_even, 0.0, half_width, k, opt, e_floor + 1e-9);
}

CrossCheck cross_validate(double lambda_prime, const Options& opt) {
  CrossCheck c;
  Options fd = opt;
  fd.backend = Backend::FiniteDifference;
  Options nm = opt;
  nm.backend = Backend::Numerov;
  c.finite_difference = ground_state(lambda_prime, fd);
  c.numerov = ground_state(lambda_prime, nm);
  c.disagreement =
      std::fabs(c.finite_difference.eigenvalues.front() - c.numerov.eigenvalues.front());
  return c;
}

int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& offdiag,
                      double sigma) {
  if (offdiag.size() + 1 != diag.size())
    throw DomainError("offdiag must have one fewer entry than diag");
  int count = 0;
  double q = 1.0;
  for (size_t j = 0; j < diag.size(); ++j) {
    double d = diag[j] - sigma;
    q = (j == 0) ? d : d - offdiag[j - 1] * offdiag[j - 1] / q;
    if (q == 0.0) q = 1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace mgdw::exactsolver
