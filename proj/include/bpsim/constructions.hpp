#pragma once

#include "bpsim/measure.hpp"
#include "bpsim/rng.hpp"

namespace bpsim {

enum class StickVariant { standard, power_law, gamma_exponential };

/// Group-truncated stick-breaking construction of a beta process.
struct StickBreakingConfig {
  BaseMeasureSpec base;
  int R = 1;  // number of groups retained
  StickVariant variant = StickVariant::standard;
  double beta_discount = 0.0;  // power_law only, in (0,1)

  void validate() const;
};

/// Finite sieve: K atoms with Beta(alpha*gamma/K, alpha*(1 - gamma/K))
/// weights. Requires constant concentration and K > gamma.
struct SieveConfig {
  BaseMeasureSpec base;
  long K = 1;

  void validate() const;
};

/// K x R array construction: V_ki ~ Beta(1, alpha), Y_ki ~ Bern(gamma/K),
/// atom k keeps the indicator-gated stick sums. Constant concentration only.
struct ArrayConfig {
  BaseMeasureSpec base;
  long K = 1;
  int R = 1;

  void validate() const;
};

/// Dirichlet process stick-breaking with R retained sticks (constant
/// concentration); weights sum to strictly less than one.
DiscreteMeasure sample_dp_stick_breaking(const BaseMeasureSpec& base, int R,
                                         RngStream& rng);

DiscreteMeasure sample_bp_stick_breaking(const StickBreakingConfig& cfg,
                                         RngStream& rng);

DiscreteMeasure sample_bp_sieve(const SieveConfig& cfg, RngStream& rng);

DiscreteMeasure sample_bp_truncated_array(const ArrayConfig& cfg,
                                          RngStream& rng);

/// Smallest R with expected missing mass gamma * (alpha/(1+alpha))^R < tol.
int truncation_level_for_missing_mass(double alpha, double gamma, double tol);

}  // namespace bpsim
