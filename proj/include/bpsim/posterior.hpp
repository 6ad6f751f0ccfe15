#pragma once

#include <vector>

#include "bpsim/likelihood.hpp"
#include "bpsim/measure.hpp"
#include "bpsim/rng.hpp"

namespace bpsim {

/// Inputs for a conjugate posterior draw: the prior base measure, the count
/// statistics over observed atom locations, and the truncation level used
/// for the fresh unobserved component H'.
struct PosteriorSpec {
  BaseMeasureSpec base;
  CountStats stats;
  int prior_truncation_R = 0;  // 0 = pick by expected missing mass < 1e-6

  void validate() const;
};

struct WeightedAtom {
  double location = 0.0;
  double weight = 0.0;
};

/// One posterior draw: weights at the observed atoms (m1 > 0) plus the
/// down-weighted fresh stick-breaking draw for the unobserved continuum.
/// No location appears in both parts almost surely.
struct PosteriorDraw {
  std::vector<WeightedAtom> observed;
  DiscreteMeasure unobserved;

  double total_mass() const;
};

/// Beta-Bernoulli posterior: at each observed atom the weight is eta * P
/// with eta ~ Beta(n, alpha(theta)) and P ~ Beta(m1, m0); unobserved atoms
/// come from a truncated stick-breaking draw, each weight multiplied by an
/// independent Beta(alpha(theta), n) variable.
PosteriorDraw sample_posterior_bernoulli(const PosteriorSpec& spec,
                                         RngStream& rng);

/// Beta-negative-binomial posterior: eta ~ Beta(m1 + n r, alpha(theta)),
/// P ~ Beta(m1, n r), and the unobserved weights are multiplied by
/// independent Beta(alpha(theta), n r) draws.
PosteriorDraw sample_posterior_negbin(const PosteriorSpec& spec,
                                      RngStream& rng);

}  // namespace bpsim
