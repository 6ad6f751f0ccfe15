#include "bpsim/rv.hpp"

#include <cmath>
#include <stdexcept>

namespace bpsim {

int StickBrokenBetaConfig::default_truncation(double a, double b, double tol) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("stick-broken beta: a, b must be positive");
  }
  const double keep = a / (a + b);
  const double decay = (a + b) / (1.0 + a + b);
  int r = 1;
  double mass = keep * decay;
  while (mass >= tol && r < 1000000) {
    mass *= decay;
    ++r;
  }
  return r;
}

void StickBrokenBetaConfig::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("stick-broken beta: a, b must be positive");
  }
  if (truncation_R < 0) {
    throw std::invalid_argument(
        "stick-broken beta: truncation_R must be >= 1 (or 0 for the default)");
  }
}

double sample_stick_broken_beta(const StickBrokenBetaConfig& cfg,
                                RngStream& rng) {
  cfg.validate();
  const int rounds = cfg.truncation_R > 0
                         ? cfg.truncation_R
                         : StickBrokenBetaConfig::default_truncation(cfg.a,
                                                                     cfg.b);
  const double rate = cfg.a + cfg.b;
  const double p_keep = cfg.a / rate;
  double remaining = 1.0;
  double total = 0.0;
  for (int i = 0; i < rounds; ++i) {
    const double v = rng.beta_one(rate);
    const bool keep = rng.bernoulli(p_keep);
    if (keep) total += v * remaining;
    remaining *= 1.0 - v;
  }
  return total;
}

double sample_stick_product(int r, double alpha, RngStream& rng) {
  if (r < 1) {
    throw std::invalid_argument("stick product: r must be >= 1");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("stick product: alpha must be positive");
  }
  double prod = 1.0;
  for (int j = 0; j < r; ++j) {
    prod *= 1.0 - rng.beta_one(alpha);
  }
  return prod;
}

double beta_or_degenerate(double a, double b, RngStream& rng) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("beta_or_degenerate: parameters must be >= 0");
  }
  if (a == 0.0) return 0.0;
  if (b == 0.0) return 1.0;
  return rng.beta(a, b);
}

double sample_product_beta(double a1, double a2, double b1, double b2,
                           RngStream& rng) {
  if (a1 < 0.0 || a2 < 0.0 || b1 < 0.0 || b2 < 0.0) {
    throw std::invalid_argument("product beta: parameters must be >= 0");
  }
  if (a1 + a2 + b1 + b2 == 0.0) {
    throw std::invalid_argument("product beta: all four parameters are zero");
  }
  const double eta1 = beta_or_degenerate(a1, a2, rng);
  const double eta2 = beta_or_degenerate(b1, b2, rng);
  const double eta3 = beta_or_degenerate(a1 + a2, b1 + b2, rng);
  return eta3 * eta1 + (1.0 - eta3) * eta2;
}

}  // namespace bpsim
