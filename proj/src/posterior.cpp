#include "bpsim/posterior.hpp"

#include <stdexcept>
#include <unordered_set>

#include "bpsim/constructions.hpp"
#include "bpsim/rv.hpp"

namespace bpsim {

void PosteriorSpec::validate() const {
  base.validate();
  if (prior_truncation_R < 0) {
    throw std::invalid_argument("posterior: prior_truncation_R must be >= 0");
  }
  if (stats.atoms.size() != stats.m1.size() ||
      stats.atoms.size() != stats.m0.size()) {
    throw std::invalid_argument("posterior: ragged count statistics");
  }
  if (stats.n < 0) {
    throw std::invalid_argument("posterior: n must be >= 0");
  }
  std::unordered_set<double> locations;
  for (std::size_t j = 0; j < stats.atoms.size(); ++j) {
    if (stats.m1[j] < 0 || stats.m0[j] < 0.0) {
      throw std::invalid_argument("posterior: negative count statistic");
    }
    if (!locations.insert(stats.atoms[j].location).second) {
      throw std::invalid_argument("posterior: duplicate atom location");
    }
  }
  if (stats.kind == LikelihoodKind::negbin && !(stats.r > 0.0)) {
    throw std::invalid_argument("posterior: negbin needs r > 0");
  }
}

double PosteriorDraw::total_mass() const {
  double sum = 0.0;
  for (const WeightedAtom& atom : observed) sum += atom.weight;
  return sum + unobserved.total_mass();
}

namespace {

int resolve_truncation(const PosteriorSpec& spec) {
  if (spec.prior_truncation_R > 0) return spec.prior_truncation_R;
  // Constant concentration picks the level exactly; otherwise the upper
  // bound of alpha gives the most conservative (largest-R) choice via the
  // monotone missing-mass formula.
  const double alpha = spec.base.concentration.is_constant()
                           ? spec.base.concentration.constant_value()
                           : spec.base.concentration.upper_bound();
  return truncation_level_for_missing_mass(alpha, spec.base.total_mass, 1e-6);
}

/// Shared body: observed weights eta*P, unobserved H' down-weighted by
/// Beta(alpha(theta), shrink_b(theta)).
PosteriorDraw sample_posterior_impl(const PosteriorSpec& spec, RngStream& rng,
                                    const std::vector<double>& eta_a,
                                    const std::vector<double>& p_a,
                                    const std::vector<double>& p_b,
                                    double shrink_b) {
  PosteriorDraw draw;
  for (std::size_t j = 0; j < spec.stats.atoms.size(); ++j) {
    if (spec.stats.m1[j] == 0) continue;  // not observed
    const double location = spec.stats.atoms[j].location;
    const double alpha = spec.base.concentration(location);
    const double eta = beta_or_degenerate(eta_a[j], alpha, rng);
    const double p = beta_or_degenerate(p_a[j], p_b[j], rng);
    draw.observed.push_back(WeightedAtom{location, eta * p});
  }

  StickBreakingConfig prior;
  prior.base = spec.base;
  prior.R = resolve_truncation(spec);
  DiscreteMeasure fresh = sample_bp_stick_breaking(prior, rng);
  for (Atom& atom : fresh.atoms) {
    const double alpha = spec.base.concentration(atom.location);
    atom.weight *= beta_or_degenerate(alpha, shrink_b, rng);
  }
  draw.unobserved = std::move(fresh);
  return draw;
}

}  // namespace

PosteriorDraw sample_posterior_bernoulli(const PosteriorSpec& spec,
                                         RngStream& rng) {
  spec.validate();
  if (spec.stats.kind != LikelihoodKind::bernoulli) {
    throw std::invalid_argument(
        "sample_posterior_bernoulli: stats are not bernoulli");
  }
  const std::size_t m = spec.stats.atoms.size();
  std::vector<double> eta_a(m), p_a(m), p_b(m);
  for (std::size_t j = 0; j < m; ++j) {
    eta_a[j] = static_cast<double>(spec.stats.n);
    p_a[j] = static_cast<double>(spec.stats.m1[j]);
    p_b[j] = spec.stats.m0[j];
  }
  return sample_posterior_impl(spec, rng, eta_a, p_a, p_b,
                               static_cast<double>(spec.stats.n));
}

PosteriorDraw sample_posterior_negbin(const PosteriorSpec& spec,
                                      RngStream& rng) {
  spec.validate();
  if (spec.stats.kind != LikelihoodKind::negbin) {
    throw std::invalid_argument(
        "sample_posterior_negbin: stats are not negbin");
  }
  const double nr = static_cast<double>(spec.stats.n) * spec.stats.r;
  const std::size_t m = spec.stats.atoms.size();
  std::vector<double> eta_a(m), p_a(m), p_b(m);
  for (std::size_t j = 0; j < m; ++j) {
    eta_a[j] = static_cast<double>(spec.stats.m1[j]) + nr;
    p_a[j] = static_cast<double>(spec.stats.m1[j]);
    p_b[j] = nr;
  }
  return sample_posterior_impl(spec, rng, eta_a, p_a, p_b, nr);
}

}  // namespace bpsim
