#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bpsim/rng.hpp"

namespace bpsim {

/// Identifies one group density f_i(. | alpha): the law of the weight kept
/// by an atom in group i, i.e. of V * exp(-T) with V ~ Beta(1, alpha) and
/// T ~ Gamma(i-1, alpha).
struct LevyDensityParams {
  double alpha = 1.0;
  int group = 1;
};

/// Group-1 density alpha * (1-pi)^(alpha-1); pi must lie in (0,1).
double levy_density_f1(double pi, double alpha);

/// Group-i density for i >= 2, evaluated by adaptive quadrature of the
/// product-distribution integral; estimated absolute error <= 1e-9.
double levy_density_fi(double pi, const LevyDensityParams& params);

/// Dispatch on group (f1 for group 1, fi otherwise).
double levy_density_group(double pi, double alpha, int group);

/// P(group-i weight > x) for x in [0,1]; closed form (1-x)^alpha at
/// group 1, one quadrature otherwise.
double levy_group_upper_tail(double x, double alpha, int group);

/// Adaptive full sum f1 + sum_{i>=2} f_i, truncated when the remaining
/// groups are provably below rel_tol of the running total. Converges to
/// alpha * pi^-1 * (1-pi)^(alpha-1).
double levy_density_total(double pi, double alpha, double rel_tol = 1e-9);

/// Tail measure nu_R^+ = sum_{i>R} lambda_i, truncated at tail_cutoff with
/// a first-moment bound on the omitted remainder.
struct LevyTail {
  double alpha = 1.0;
  double gamma = 1.0;
  int R = 0;
  int tail_cutoff = 1;       // I_max: last group included
  double remainder_bound = 0.0;  // gamma * (alpha/(1+alpha))^I_max

  /// Chooses tail_cutoff so the omitted exponent contribution
  /// gamma * mr * (alpha/(1+alpha))^I_max drops below tol (mr = M*r weights
  /// the first-moment bound; use 1 for plain density work).
  static LevyTail make(double alpha, double gamma, int R, double mr = 1.0,
                       double tol = 1e-10);
};

/// sum_{i=R+1}^{tail_cutoff} f_i(pi); the omitted remainder is bounded by
/// tail.remainder_bound (as a pi-first-moment).
double levy_tail_density(double pi, const LevyTail& tail);

/// gamma * (alpha/(1+alpha))^R, the mean total weight beyond group R.
double expected_missing_mass(double alpha, double gamma, int R);

/// 1 - exp(-gamma * M * r * (alpha/(1+alpha))^R); r = 1 is the Bernoulli
/// case, general r the negative binomial extension.
double truncation_bound_analytic(double alpha, double gamma, int R, int M,
                                 double r);

/// Left-endpoint partition of [0,1) into n cells B_nk = [(k-1)/n, k/n).
struct SimpleFunctionGrid {
  int n = 100;
  double left_endpoint(int k) const {  // 1-based cell index
    return static_cast<double>(k - 1) / n;
  }
  double right_endpoint(int k) const { return static_cast<double>(k) / n; }
};

struct TruncationReport {
  int R = 0;
  int M = 1;
  double r = 1.0;
  double exact_PE = 0.0;
  double analytic_bound = 0.0;
  double expected_missing_mass = 0.0;
  double quadrature_error = 0.0;
  // provenance
  std::string method;  // "adaptive" | "simple_function" | "monte_carlo"
  int grid_n = 0;
  double tolerance = 0.0;
  int tail_cutoff = 0;
  double remainder_bound = 0.0;
};

/// Exact truncation-error probability (adaptive quadrature):
/// 1 - exp{-gamma * integral of (sum_{i>R} f_i(pi)) (1 - (1-pi)^(M r)) dpi}.
TruncationReport truncation_error_exact(double alpha, double gamma, int R,
                                        int M, double r,
                                        double tol = 1e-10);

/// Same quantity via the left-endpoint simple-function scheme on the grid;
/// converges to the adaptive value from below as n grows.
TruncationReport truncation_error_exact(double alpha, double gamma, int R,
                                        int M, double r,
                                        const SimpleFunctionGrid& grid);

/// Monte Carlo estimate: simulate the discarded groups and count replicates
/// where any of the M likelihood processes marks a tail atom.
/// quadrature_error carries the binomial standard error.
TruncationReport truncation_error_monte_carlo(double alpha, double gamma,
                                              int R, int M, double r,
                                              long n_reps, RngStream& rng);

/// Sweep over truncation levels sharing one set of per-group integrals
/// J_i = integral f_i(pi) (1 - (1-pi)^(M r)) dpi; each increment of R drops
/// exactly one term.
class TruncationSweep {
public:
  TruncationSweep(double alpha, double gamma, int M, double r,
                  double tol = 1e-10);

  TruncationReport report(int R) const;
  std::vector<TruncationReport> run(int R_max) const;

  double group_integral(int i) const { return group_integrals_.at(i - 1); }
  int tail_cutoff() const { return tail_cutoff_; }

private:
  double alpha_, gamma_, r_;
  int M_;
  double tol_;
  int tail_cutoff_;
  double remainder_bound_;
  std::vector<double> group_integrals_;
  std::vector<double> group_errors_;
};

/// Integral over (0,1) of g(pi) f_group(pi) dpi with the endpoint and
/// near-zero transforms appropriate to the group density.
double integrate_against_group_density(double alpha, int group,
                                       const std::function<double(double)>& g,
                                       double abs_tol = 1e-10);

/// Laplace-functional exponent mu_A * integral (1 - e^{t pi}) alpha pi^-1
/// (1-pi)^(alpha-1) dpi for t < 0 over a region of base mass mu_A.
double bp_laplace_exponent(double alpha, double mu_A, double t,
                           double abs_tol = 1e-12);

/// nu(Theta x [eps, 1]) = gamma * alpha * integral_eps^1 pi^-1 (1-pi)^(alpha-1):
/// the Poisson mean of the atom count with weight >= eps.
double levy_mass_above(double alpha, double gamma, double eps,
                       double abs_tol = 1e-12);

}  // namespace bpsim
