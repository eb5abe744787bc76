#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "mgdw/errors.hpp"

namespace mgdw {

struct RootResult {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
};

struct RootOptions {
  double f_tol = 0.0;      // accept when |f(x)| <= f_tol
  double x_tol = 1e-15;    // or when the bracket shrinks below x_tol (relative)
  int max_iterations = 200;
};

// Bracketed root solve: bisection with secant acceleration. The bracket
// [lo, hi] must straddle a sign change; the bracket never widens, so the
// iteration cannot diverge.
template <class F>
RootResult solve_bracketed(F&& f, double lo, double hi, RootOptions opt = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (std::isnan(flo) || std::isnan(fhi))
    throw NoRootError("bracket endpoint evaluated to NaN");
  if ((flo > 0) == (fhi > 0))
    throw NoRootError("no sign change in bracket");

  double x = lo, fx = flo;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    // secant candidate from the current bracket endpoints
    double xs = hi - fhi * (hi - lo) / (fhi - flo);
    double xm = 0.5 * (lo + hi);
    x = (xs > lo && xs < hi) ? xs : xm;
    // guard against stalling at an endpoint
    double scale = std::fabs(hi - lo);
    if (std::fabs(x - lo) < 0.01 * scale || std::fabs(hi - x) < 0.01 * scale)
      x = xm;
    fx = f(x);
    if (std::isnan(fx)) throw NoRootError("objective evaluated to NaN inside bracket");
    if (std::fabs(fx) <= opt.f_tol) break;
    if ((fx > 0) == (fhi > 0)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    if (hi - lo <= opt.x_tol * (std::fabs(lo) + std::fabs(hi) + 1e-300)) break;
  }
  return {x, fx, it};
}

// One Newton polish step; falls back to x when the derivative underflows.
inline double newton_polish(const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double x) {
  double d = df(x);
  if (std::fabs(d) < std::numeric_limits<double>::min() * 1e4) return x;
  return x - f(x) / d;
}

}  // namespace mgdw
