#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <unordered_set>
#include <vector>

#include "bpsim/constructions.hpp"
#include "bpsim/posterior.hpp"
#include "bpsim/replicate.hpp"
#include "bpsim/verify.hpp"

using namespace bpsim;

namespace {

PosteriorSpec make_spec(double alpha, int n, LikelihoodKind kind, double r,
                        std::vector<long> m1, std::vector<double> m0,
                        int truncation = 2) {
  PosteriorSpec spec;
  spec.base.total_mass = 1.0;
  spec.base.concentration = ConcentrationFn::constant(alpha);
  spec.prior_truncation_R = truncation;
  spec.stats.n = n;
  spec.stats.kind = kind;
  spec.stats.r = r;
  for (std::size_t j = 0; j < m1.size(); ++j) {
    spec.stats.atoms.push_back(
        Atom{0.1 + 0.2 * static_cast<double>(j), 0.5, 1, static_cast<int>(j + 1)});
  }
  spec.stats.m1 = std::move(m1);
  spec.stats.m0 = std::move(m0);
  return spec;
}

}  // namespace

TEST_CASE("no data recovers the prior exactly") {
  // With n = 0 the down-weighting beta is Beta(alpha, 0) = 1 and consumes no
  // draws, so the posterior equals a prior draw from the same stream.
  const PosteriorSpec spec =
      make_spec(1.5, 0, LikelihoodKind::bernoulli, 1.0, {}, {}, 8);
  RngStream rng_posterior(501, 3);
  const PosteriorDraw draw = sample_posterior_bernoulli(spec, rng_posterior);
  CHECK(draw.observed.empty());

  StickBreakingConfig prior;
  prior.base = spec.base;
  prior.R = 8;
  RngStream rng_prior(501, 3);
  const DiscreteMeasure reference = sample_bp_stick_breaking(prior, rng_prior);
  REQUIRE(draw.unobserved.atoms.size() == reference.atoms.size());
  for (std::size_t i = 0; i < reference.atoms.size(); ++i) {
    CHECK(draw.unobserved.atoms[i].weight == reference.atoms[i].weight);
    CHECK(draw.unobserved.atoms[i].location == reference.atoms[i].location);
  }

  const PosteriorSpec nb_spec =
      make_spec(1.5, 0, LikelihoodKind::negbin, 2.0, {}, {}, 8);
  RngStream rng_nb(501, 4);
  const PosteriorDraw nb_draw = sample_posterior_negbin(nb_spec, rng_nb);
  CHECK(nb_draw.observed.empty());
  CHECK(nb_draw.unobserved.atoms.size() > 0);
}

TEST_CASE("composite observed weights match the reduced conjugate moments") {
  // Bernoulli, M1 = 2, M0 = 3, alpha = 1, n = 5 -> Beta(2, 4):
  // mean 1/3, second moment a(a+1)/((a+b)(a+b+1)) = 1/7.
  const PosteriorSpec spec =
      make_spec(1.0, 5, LikelihoodKind::bernoulli, 1.0, {2}, {3.0});
  const long n_reps = 100000;
  auto weights = map_replicates<double>(502, 0, n_reps, [&](RngStream& rng) {
    return sample_posterior_bernoulli(spec, rng).observed.at(0).weight;
  });
  CHECK(check_mc_mean("posterior-mean", weights, 1.0 / 3.0, 4.0).pass);
  std::vector<double> squares(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    squares[i] = weights[i] * weights[i];
  }
  CHECK(check_mc_mean("posterior-second-moment", squares, 1.0 / 7.0, 4.0).pass);
}

TEST_CASE("negbin observed weights shrink stochastically as r grows") {
  // Reduced form Beta(sum X, alpha + n r): mean 4 / (4 + 1 + 2 r).
  double prev_mean = 1.0;
  for (double r : {1.0, 5.0, 25.0}) {
    const PosteriorSpec spec = make_spec(1.0, 2, LikelihoodKind::negbin, r,
                                         {4}, {2.0 * r});
    auto weights = map_replicates<double>(
        503, static_cast<std::uint64_t>(r * 1000), 20000,
        [&](RngStream& rng) {
          return sample_posterior_negbin(spec, rng).observed.at(0).weight;
        });
    const double target = 4.0 / (5.0 + 2.0 * r);
    CHECK(check_mc_mean("negbin-shrink", weights, target, 4.0).pass);
    double mean = 0.0;
    for (double w : weights) mean += w;
    mean /= weights.size();
    CHECK(mean < prev_mean);
    prev_mean = mean;
  }
}

TEST_CASE("observed and unobserved parts never share a location") {
  const PosteriorSpec spec = make_spec(1.0, 3, LikelihoodKind::bernoulli, 1.0,
                                       {3, 1, 0}, {0.0, 2.0, 3.0}, 15);
  RngStream rng(504);
  for (int rep = 0; rep < 200; ++rep) {
    const PosteriorDraw draw = sample_posterior_bernoulli(spec, rng);
    // Atoms with m1 = 0 are not observed.
    CHECK(draw.observed.size() == 2);
    std::unordered_set<double> seen;
    for (const WeightedAtom& atom : draw.observed) {
      CHECK(atom.weight > 0.0);
      CHECK(atom.weight <= 1.0);
      seen.insert(atom.location);
    }
    for (const Atom& atom : draw.unobserved.atoms) {
      CHECK(seen.find(atom.location) == seen.end());
      CHECK(atom.weight > 0.0);
      CHECK(atom.weight <= 1.0);
    }
  }
}

TEST_CASE("posterior validation errors") {
  RngStream rng(505);
  PosteriorSpec wrong_kind =
      make_spec(1.0, 2, LikelihoodKind::negbin, 1.0, {1}, {2.0});
  CHECK_THROWS_AS(sample_posterior_bernoulli(wrong_kind, rng),
                  std::invalid_argument);

  PosteriorSpec dup = make_spec(1.0, 2, LikelihoodKind::bernoulli, 1.0,
                                {1, 1}, {1.0, 1.0});
  dup.stats.atoms[1].location = dup.stats.atoms[0].location;
  CHECK_THROWS_AS(sample_posterior_bernoulli(dup, rng), std::invalid_argument);

  PosteriorSpec negative = make_spec(1.0, 2, LikelihoodKind::bernoulli, 1.0,
                                     {-1}, {3.0});
  CHECK_THROWS_AS(sample_posterior_bernoulli(negative, rng),
                  std::invalid_argument);

  PosteriorSpec bad_r = make_spec(1.0, 2, LikelihoodKind::negbin, -1.0,
                                  {1}, {2.0});
  CHECK_THROWS_AS(sample_posterior_negbin(bad_r, rng), std::invalid_argument);
}

TEST_CASE("geweke joint test at the acceptance configuration") {
  const std::vector<TestReport> reports = check_geweke(seeds::kDefault + 22);
  for (const TestReport& report : reports) {
    INFO(report.name, " statistic=", report.statistic,
         " threshold=", report.threshold);
    CHECK(report.pass);
  }
}
