#pragma once

#include "bpsim/rng.hpp"

namespace bpsim {

/// Stick-broken Beta(a, b) draw, truncated at truncation_R rounds.
struct StickBrokenBetaConfig {
  double a = 1.0;
  double b = 1.0;
  int truncation_R = 0;  // 0 = pick default_truncation()

  /// Smallest R whose expected ignored stick mass
  /// (a/(a+b)) * ((a+b)/(1+a+b))^R drops below tol.
  static int default_truncation(double a, double b, double tol = 1e-12);
  void validate() const;
};

/// Truncated series sum_{i<=R} V_i prod_{j<i} (1-V_j) 1(Y_i = 1) with
/// V_i ~ Beta(1, a+b) and Y_i ~ Bern(a/(a+b)); converges to Beta(a, b) as
/// R grows. Draw order per round: V_i first, then Y_i.
double sample_stick_broken_beta(const StickBrokenBetaConfig& cfg,
                                RngStream& rng);

/// prod_{j<=r} (1-V_j) with V_j ~ Beta(1, alpha); equal in distribution to
/// exp(-T) with T ~ Gamma(r, alpha).
double sample_stick_product(int r, double alpha, RngStream& rng);

/// Weighted combination eta3*eta1 + (1-eta3)*eta2 with
/// eta1 ~ Beta(a1, a2), eta2 ~ Beta(b1, b2), eta3 ~ Beta(a1+a2, b1+b2);
/// distributed Beta(a1+b1, a2+b2). Degenerate pairs follow the
/// beta_or_degenerate conventions.
double sample_product_beta(double a1, double a2, double b1, double b2,
                           RngStream& rng);

/// Beta(a, b) with the degenerate conventions Beta(c, 0) = 1 and
/// Beta(0, c) = 0 for c > 0 (and Beta(0,0) = 0, only reachable in unused
/// branches of degenerate combinations).
double beta_or_degenerate(double a, double b, RngStream& rng);

}  // namespace bpsim
