#pragma once

#include <functional>

namespace bpsim {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evaluations = 0;
  bool converged = false;
};

/// Globally adaptive integration of f over [a, b] with a 15-point
/// Gauss-Kronrod rule; the interval with the largest error estimate is
/// bisected until the total estimate drops below
/// max(abs_tol, rel_tol * |value|) or the interval budget is exhausted.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, double rel_tol = 1e-12,
                     int max_intervals = 4000);

/// Same, but throws std::runtime_error with diagnostics when the requested
/// tolerance is not reached.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol = 1e-12,
                          int max_intervals = 4000);

}  // namespace bpsim
