#include "bpsim/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bpsim/quadrature.hpp"
#include "bpsim/special.hpp"

namespace bpsim {

namespace {

void check_pi_domain(double pi) {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw std::domain_error("levy density: pi must lie in (0,1)");
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("levy density: alpha must be positive");
  }
}

double pow_int(double base, int e) {
  if (e == 0) return 1.0;
  return std::pow(base, e);
}

// f_i(pi) for i >= 2 as constant * integral. Two integration paths:
// for alpha >= 1 the w-integrand (w - pi)^(alpha-1) is bounded and we
// integrate over w directly; for alpha < 1 the substitution
// w = pi + (1-pi) u^(1/alpha) absorbs the endpoint singularity exactly,
// leaving a smooth integrand on u in (0,1).
QuadResult fi_quadrature(double pi, double alpha, int group, double abs_tol,
                         int max_intervals) {
  const int logpow = group - 2;
  if (alpha >= 1.0) {
    const double constant =
        std::exp(group * std::log(alpha) - std::lgamma(group - 1.0));
    auto integrand = [=](double w) {
      return std::pow(w - pi, alpha - 1.0) * pow_int(std::log(1.0 / w), logpow) /
             w;
    };
    QuadResult q = integrate(integrand, pi, 1.0,
                             abs_tol / std::max(constant, 1e-300), 1e-13,
                             max_intervals);
    q.value *= constant;
    q.error *= constant;
    return q;
  }
  const double constant =
      std::exp((group - 1) * std::log(alpha) + alpha * std::log1p(-pi) -
               std::lgamma(group - 1.0));
  const double inv_alpha = 1.0 / alpha;
  auto integrand = [=](double u) {
    const double w = pi + (1.0 - pi) * std::pow(u, inv_alpha);
    return pow_int(std::log(1.0 / w), logpow) / w;
  };
  QuadResult q = integrate(integrand, 0.0, 1.0,
                           abs_tol / std::max(constant, 1e-300), 1e-13,
                           max_intervals);
  q.value *= constant;
  q.error *= constant;
  return q;
}

double fi_value(double pi, double alpha, int group) {
  QuadResult q = fi_quadrature(pi, alpha, group, 1e-11, 800);
  if (!q.converged) {
    throw std::runtime_error("levy_density_fi: quadrature did not converge");
  }
  return q.value;
}

// Upper tail U_i(x) = P(V e^{-T} > x) for group i >= 2.
QuadResult group_upper_tail(double x, double alpha, int group,
                            double abs_tol) {
  const int logpow = group - 2;
  const double constant =
      std::exp((group - 1) * std::log(alpha) - std::lgamma(group - 1.0));
  auto integrand = [=](double w) {
    return std::pow(w, alpha - 1.0) * pow_int(std::log(1.0 / w), logpow) *
           std::pow(1.0 - x / w, alpha);
  };
  QuadResult q = integrate(integrand, x, 1.0,
                           abs_tol / std::max(constant, 1e-300), 1e-11, 600);
  q.value *= constant;
  q.error *= constant;
  return q;
}

double missing_mass_ratio(double alpha) { return alpha / (1.0 + alpha); }

}  // namespace

double levy_density_f1(double pi, double alpha) {
  check_alpha(alpha);
  check_pi_domain(pi);
  return alpha * std::exp((alpha - 1.0) * std::log1p(-pi));
}

double levy_density_fi(double pi, const LevyDensityParams& params) {
  check_alpha(params.alpha);
  check_pi_domain(pi);
  if (params.group < 2) {
    throw std::invalid_argument(
        "levy_density_fi: group must be >= 2 (use levy_density_f1)");
  }
  return fi_value(pi, params.alpha, params.group);
}

double levy_density_group(double pi, double alpha, int group) {
  if (group == 1) return levy_density_f1(pi, alpha);
  return levy_density_fi(pi, LevyDensityParams{alpha, group});
}

double levy_group_upper_tail(double x, double alpha, int group) {
  check_alpha(alpha);
  if (group < 1) {
    throw std::invalid_argument("levy_group_upper_tail: group must be >= 1");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("levy_group_upper_tail: x must lie in [0,1]");
  }
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  if (group == 1) return std::exp(alpha * std::log1p(-x));
  QuadResult q = group_upper_tail(x, alpha, group, 1e-12);
  if (!q.converged) {
    throw std::runtime_error(
        "levy_group_upper_tail: quadrature did not converge");
  }
  return q.value;
}

double levy_density_total(double pi, double alpha, double rel_tol) {
  check_alpha(alpha);
  check_pi_domain(pi);
  // Tail bound: sum_{j>I} f_j(pi) <= alpha (1-pi)^alpha / pi
  //   * P(Pois(alpha ln(1/pi)) >= I-1).
  const double factor = alpha * std::exp(alpha * std::log1p(-pi)) / pi;
  const double mean = alpha * std::log(1.0 / pi);
  double total = levy_density_f1(pi, alpha);
  for (int i = 2; i <= 100000; ++i) {
    total += fi_value(pi, alpha, i);
    if (factor * poisson_upper_tail(mean, i - 1) <= rel_tol * total) break;
  }
  return total;
}

LevyTail LevyTail::make(double alpha, double gamma, int R, double mr,
                        double tol) {
  check_alpha(alpha);
  if (!(gamma > 0.0) || R < 0 || !(mr > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("LevyTail: invalid parameters");
  }
  const double ratio = missing_mass_ratio(alpha);
  int cutoff = std::max(R, 1);
  double bound = gamma * mr * std::pow(ratio, cutoff);
  while (bound >= tol && cutoff < 1000000) {
    bound *= ratio;
    ++cutoff;
  }
  LevyTail tail;
  tail.alpha = alpha;
  tail.gamma = gamma;
  tail.R = R;
  tail.tail_cutoff = cutoff;
  tail.remainder_bound = gamma * std::pow(ratio, cutoff);
  return tail;
}

double levy_tail_density(double pi, const LevyTail& tail) {
  check_alpha(tail.alpha);
  check_pi_domain(pi);
  double sum = 0.0;
  for (int i = tail.R + 1; i <= tail.tail_cutoff; ++i) {
    sum += levy_density_group(pi, tail.alpha, i);
  }
  return sum;
}

double expected_missing_mass(double alpha, double gamma, int R) {
  check_alpha(alpha);
  if (!(gamma > 0.0) || R < 0) {
    throw std::invalid_argument(
        "expected_missing_mass: gamma must be positive, R >= 0");
  }
  return gamma * std::pow(missing_mass_ratio(alpha), R);
}

double truncation_bound_analytic(double alpha, double gamma, int R, int M,
                                 double r) {
  check_alpha(alpha);
  if (!(gamma > 0.0) || R < 0 || M < 1 || !(r > 0.0)) {
    throw std::invalid_argument("truncation bound: invalid parameters");
  }
  return -std::expm1(-gamma * M * r * std::pow(missing_mass_ratio(alpha), R));
}

double integrate_against_group_density(double alpha, int group,
                                       const std::function<double(double)>& g,
                                       double abs_tol) {
  check_alpha(alpha);
  if (group < 1) {
    throw std::invalid_argument("group integral: group must be >= 1");
  }
  if (group == 1) {
    // s = (1-pi)^alpha turns f1 dpi into ds exactly.
    const double inv_alpha = 1.0 / alpha;
    auto integrand = [&](double s) {
      return g(-std::expm1(inv_alpha * std::log(s)));
    };
    return integrate_or_throw(integrand, 0.0, 1.0, abs_tol, 1e-12, 2000);
  }
  // Piece on (0, 1/2] through pi = e^{-u} (handles the polylog growth of
  // f_i near zero); piece on [1/2, 1) directly.
  auto fi_at = [&](double pi) { return fi_value(pi, alpha, group); };
  const double u_max = 60.0 / std::min(alpha, 1.0) + 60.0;
  auto low_integrand = [&](double u) {
    const double pi = std::exp(-u);
    return g(pi) * fi_at(pi) * pi;
  };
  const double lo =
      integrate_or_throw(low_integrand, std::log(2.0), u_max, 0.5 * abs_tol,
                         1e-12, 2000);
  auto high_integrand = [&](double pi) { return g(pi) * fi_at(pi); };
  const double hi = integrate_or_throw(high_integrand, 0.5, 1.0,
                                       0.5 * abs_tol, 1e-12, 2000);
  return lo + hi;
}

namespace {

TruncationReport make_report(double alpha, double gamma, int R, int M,
                             double r) {
  TruncationReport report;
  report.R = R;
  report.M = M;
  report.r = r;
  report.analytic_bound = truncation_bound_analytic(alpha, gamma, R, M, r);
  report.expected_missing_mass = expected_missing_mass(alpha, gamma, R);
  return report;
}

void check_truncation_params(double alpha, double gamma, int R, int M,
                             double r) {
  check_alpha(alpha);
  if (!(gamma > 0.0) || R < 0 || M < 1 || !(r > 0.0)) {
    throw std::invalid_argument("truncation error: invalid parameters");
  }
}

}  // namespace

TruncationSweep::TruncationSweep(double alpha, double gamma, int M, double r,
                                 double tol)
    : alpha_(alpha), gamma_(gamma), r_(r), M_(M), tol_(tol) {
  check_truncation_params(alpha, gamma, 0, M, r);
  const double mr = static_cast<double>(M) * r;
  const LevyTail tail = LevyTail::make(alpha, gamma, 0, mr, tol);
  tail_cutoff_ = tail.tail_cutoff;
  remainder_bound_ = tail.remainder_bound;
  auto hit_probability = [mr](double pi) {
    return -std::expm1(mr * std::log1p(-pi));
  };
  group_integrals_.resize(tail_cutoff_);
  group_errors_.assign(tail_cutoff_, tol);
  for (int i = 1; i <= tail_cutoff_; ++i) {
    group_integrals_[i - 1] =
        integrate_against_group_density(alpha_, i, hit_probability, tol_);
  }
}

TruncationReport TruncationSweep::report(int R) const {
  if (R < 0) throw std::invalid_argument("TruncationSweep: R must be >= 0");
  TruncationReport out = make_report(alpha_, gamma_, R, M_, r_);
  double exponent = 0.0;
  double err = 0.0;
  for (int i = tail_cutoff_; i > R; --i) {
    exponent += group_integrals_[i - 1];
    err += group_errors_[i - 1];
  }
  const double mr = static_cast<double>(M_) * r_;
  out.exact_PE = -std::expm1(-gamma_ * exponent);
  out.quadrature_error = gamma_ * err + mr * remainder_bound_;
  out.method = "adaptive";
  out.tolerance = tol_;
  out.tail_cutoff = tail_cutoff_;
  out.remainder_bound = remainder_bound_;
  return out;
}

std::vector<TruncationReport> TruncationSweep::run(int R_max) const {
  std::vector<TruncationReport> reports;
  reports.reserve(R_max + 1);
  for (int R = 0; R <= R_max; ++R) reports.push_back(report(R));
  return reports;
}

TruncationReport truncation_error_exact(double alpha, double gamma, int R,
                                        int M, double r, double tol) {
  check_truncation_params(alpha, gamma, R, M, r);
  const double mr = static_cast<double>(M) * r;
  const LevyTail tail = LevyTail::make(alpha, gamma, R, mr, tol);
  auto hit_probability = [mr](double pi) {
    return -std::expm1(mr * std::log1p(-pi));
  };
  double exponent = 0.0;
  double err = 0.0;
  for (int i = R + 1; i <= tail.tail_cutoff; ++i) {
    exponent += integrate_against_group_density(alpha, i, hit_probability, tol);
    err += tol;
  }
  TruncationReport out = make_report(alpha, gamma, R, M, r);
  out.exact_PE = -std::expm1(-gamma * exponent);
  out.quadrature_error = gamma * err + mr * tail.remainder_bound;
  out.method = "adaptive";
  out.tolerance = tol;
  out.tail_cutoff = tail.tail_cutoff;
  out.remainder_bound = tail.remainder_bound;
  return out;
}

TruncationReport truncation_error_exact(double alpha, double gamma, int R,
                                        int M, double r,
                                        const SimpleFunctionGrid& grid) {
  check_truncation_params(alpha, gamma, R, M, r);
  if (grid.n < 2) {
    throw std::invalid_argument("simple-function grid: n must be >= 2");
  }
  const double mr = static_cast<double>(M) * r;
  const LevyTail tail = LevyTail::make(alpha, gamma, R, mr, 1e-10);
  const int n = grid.n;

  // Tail upper CDF at the cell boundaries j/n, j = 0..n.
  std::vector<double> upper(n + 1, 0.0);
  upper[0] = static_cast<double>(tail.tail_cutoff - R);
  double eval_err = 0.0;
  for (int j = 1; j < n; ++j) {
    const double x = static_cast<double>(j) / n;
    double u = 0.0;
    for (int i = R + 1; i <= tail.tail_cutoff; ++i) {
      if (i == 1) {
        u += std::exp(alpha * std::log1p(-x));
      } else {
        QuadResult q = group_upper_tail(x, alpha, i, 1e-12);
        u += q.value;
        eval_err += q.error;
      }
    }
    upper[j] = u;
  }

  // Left-endpoint simple function; the k = 1 cell has representative 0 and
  // contributes nothing, matching the proof's product over k = 2..n.
  double exponent = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double mass = upper[k - 1] - upper[k];
    const double b = grid.left_endpoint(k);
    exponent += mass * -std::expm1(mr * std::log1p(-b));
  }
  TruncationReport out = make_report(alpha, gamma, R, M, r);
  out.exact_PE = -std::expm1(-gamma * exponent);
  out.quadrature_error = gamma * (2.0 * eval_err) + mr * tail.remainder_bound;
  out.method = "simple_function";
  out.grid_n = n;
  out.tail_cutoff = tail.tail_cutoff;
  out.remainder_bound = tail.remainder_bound;
  return out;
}

TruncationReport truncation_error_monte_carlo(double alpha, double gamma,
                                              int R, int M, double r,
                                              long n_reps, RngStream& rng) {
  check_truncation_params(alpha, gamma, R, M, r);
  if (n_reps < 1) {
    throw std::invalid_argument("monte carlo: n_reps must be >= 1");
  }
  const double mr = static_cast<double>(M) * r;
  const LevyTail tail = LevyTail::make(alpha, gamma, R, mr, 1e-8);
  long hits = 0;
  for (long rep = 0; rep < n_reps; ++rep) {
    bool hit = false;
    for (int i = R + 1; i <= tail.tail_cutoff; ++i) {
      const long count = rng.poisson(gamma);
      for (long j = 0; j < count; ++j) {
        const double v = rng.beta_one(alpha);
        const double pi =
            i == 1 ? v : v * std::exp(-rng.gamma(i - 1.0, alpha));
        // P(some of the M processes marks the atom) = 1 - (1-pi)^(M r).
        if (rng.uniform01() < -std::expm1(mr * std::log1p(-pi))) hit = true;
      }
    }
    if (hit) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n_reps);
  TruncationReport out = make_report(alpha, gamma, R, M, r);
  out.exact_PE = p;
  out.quadrature_error = std::sqrt(p * (1.0 - p) / n_reps);
  out.method = "monte_carlo";
  out.tail_cutoff = tail.tail_cutoff;
  out.remainder_bound = tail.remainder_bound;
  return out;
}

double bp_laplace_exponent(double alpha, double mu_A, double t,
                           double abs_tol) {
  check_alpha(alpha);
  if (!(t < 0.0)) {
    throw std::invalid_argument("laplace exponent: t must be negative");
  }
  if (mu_A < 0.0) {
    throw std::invalid_argument("laplace exponent: mu_A must be >= 0");
  }
  if (mu_A == 0.0) return 0.0;
  auto g = [t](double pi) { return -std::expm1(t * pi) / pi; };
  return mu_A * integrate_against_group_density(alpha, 1, g, abs_tol);
}

double levy_mass_above(double alpha, double gamma, double eps,
                       double abs_tol) {
  check_alpha(alpha);
  if (!(gamma > 0.0) || !(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument(
        "levy_mass_above: gamma positive, eps in (0,1)");
  }
  // s = (1-pi)^alpha; pi >= eps maps to s <= (1-eps)^alpha.
  const double inv_alpha = 1.0 / alpha;
  auto integrand = [&](double s) {
    const double pi = -std::expm1(inv_alpha * std::log(s));
    return 1.0 / pi;
  };
  const double s_hi = std::exp(alpha * std::log1p(-eps));
  return gamma * integrate_or_throw(integrand, 0.0, s_hi, abs_tol, 1e-12,
                                    2000);
}

}  // namespace bpsim
