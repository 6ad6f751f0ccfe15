#pragma once

namespace bpsim {

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
/// computed by the power series for x < a + 1 and by the Lentz continued
/// fraction otherwise.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

double poisson_pmf(long k, double mean);

/// P(Poisson(mean) >= k); equals gamma_p(k, mean) for k >= 1.
double poisson_upper_tail(double mean, long k);

/// Quantile of the chi-square distribution with df degrees of freedom,
/// by bisection on the regularized incomplete gamma.
double chi_square_quantile(double p, int df);

}  // namespace bpsim
