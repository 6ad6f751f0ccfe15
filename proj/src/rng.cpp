#include "bpsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bpsim {

namespace {

// Coefficients for Acklam's inverse normal CDF approximation.
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};

double acklam(double p) {
  constexpr double p_low = 0.02425;
  double q, x;
  if (p < p_low) {
    q = std::sqrt(-2.0 * std::log(p));
    x = (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q +
         kC[5]) /
        ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    q = p - 0.5;
    double r = q * q;
    x = (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r +
         kA[5]) *
        q /
        (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r +
         1.0);
  } else {
    q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q +
          kC[5]) /
        ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  }
  return x;
}

constexpr double kSqrt2Pi = 2.506628274631000502415765284811;

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0,1), got " +
                            std::to_string(p));
  }
  double x = acklam(p);
  // One Halley step against the exact CDF expressed through erfc.
  double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double RngStream::normal() { return normal_quantile(uniform01()); }

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) {
    throw std::invalid_argument("exponential: rate must be positive");
  }
  return -std::log(uniform01()) / rate;
}

double RngStream::beta_one(double b) {
  if (!(b > 0.0)) {
    throw std::invalid_argument("beta_one: parameter must be positive");
  }
  if (b == 1.0) return uniform01();
  return -std::expm1(std::log(uniform01()) / b);
}

double RngStream::gamma_unit_rate(double shape) {
  if (shape < 1.0) {
    // Boosted draw: Gamma(shape) = Gamma(shape + 1) * U^{1/shape}.
    double g = gamma_unit_rate(shape + 1.0);
    return g * std::exp(std::log(uniform01()) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::invalid_argument("gamma: shape and rate must be positive");
  }
  return gamma_unit_rate(shape) / rate;
}

double RngStream::beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("beta: parameters must be positive");
  }
  if (std::min(a, b) < 1e-2) {
    // Log-space ratio; direct gamma draws underflow for tiny shapes.
    double la = std::log(gamma_unit_rate(a + 1.0)) + std::log(uniform01()) / a;
    double lb = std::log(gamma_unit_rate(b + 1.0)) + std::log(uniform01()) / b;
    double x = (la >= lb) ? 1.0 / (1.0 + std::exp(lb - la))
                          : std::exp(la - lb) / (1.0 + std::exp(la - lb));
    // Clamp underflow into (0, 1]; weights of exact 0 are not representable.
    if (x <= 0.0) x = std::numeric_limits<double>::min();
    if (x > 1.0) x = 1.0;
    return x;
  }
  const double ga = gamma_unit_rate(a);
  const double gb = gamma_unit_rate(b);
  double x = ga / (ga + gb);
  if (x <= 0.0) x = std::numeric_limits<double>::min();
  if (x >= 1.0) x = 1.0;
  return x;
}

long RngStream::poisson(double mean) {
  if (!(mean >= 0.0)) {
    throw std::invalid_argument("poisson: mean must be nonnegative");
  }
  long total = 0;
  // Additivity: Pois(m1 + m2) = Pois(m1) + Pois(m2) independently.
  while (mean > 30.0) {
    total += poisson(30.0);
    mean -= 30.0;
  }
  if (mean == 0.0) return total;
  const double limit = std::exp(-mean);
  double prod = 1.0;
  long k = 0;
  do {
    ++k;
    prod *= uniform01();
  } while (prod > limit);
  return total + (k - 1);
}

long RngStream::negative_binomial(double r, double pi) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("negative_binomial: r must be positive");
  }
  if (!(pi >= 0.0 && pi < 1.0)) {
    throw std::invalid_argument(
        "negative_binomial: pi must lie in [0,1), got " + std::to_string(pi));
  }
  if (pi == 0.0) return 0;
  const double lambda = gamma(r, (1.0 - pi) / pi);
  return poisson(lambda);
}

}  // namespace bpsim
