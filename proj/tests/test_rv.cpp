#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bpsim/replicate.hpp"
#include "bpsim/rv.hpp"
#include "bpsim/verify.hpp"

using namespace bpsim;

TEST_CASE("default truncation follows the expected-ignored-mass rule") {
  const int r = StickBrokenBetaConfig::default_truncation(1.0, 1.0);
  const double keep = 0.5, decay = 2.0 / 3.0;
  CHECK(keep * std::pow(decay, r) < 1e-12);
  CHECK(keep * std::pow(decay, r - 1) >= 1e-12);
  CHECK_THROWS_AS(StickBrokenBetaConfig::default_truncation(0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("stick-broken beta matches a direct beta sampler") {
  const long n = 10000;
  StickBrokenBetaConfig cfg;
  cfg.a = 1.0;
  cfg.b = 1.0;
  auto constructed = map_replicates<double>(
      101, 0, n, [&](RngStream& rng) { return sample_stick_broken_beta(cfg, rng); });
  auto direct = map_replicates<double>(
      101, 500000, n, [](RngStream& rng) { return rng.uniform01(); });
  const TestReport ks = ks_two_sample("lemma4-uniform", constructed, direct,
                                      0.01, 101);
  CHECK(ks.pass);
}

TEST_CASE("one-round truncation is the bernoulli-gated first break") {
  // At R = 1 the law is (a/(a+b)) Beta(1, a+b) + (b/(a+b)) delta_0.
  const double a = 2.0, b = 3.0;
  StickBrokenBetaConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.truncation_R = 1;
  const long n = 20000;
  long zeros = 0;
  std::vector<double> positives;
  RngStream rng(102);
  for (long i = 0; i < n; ++i) {
    const double x = sample_stick_broken_beta(cfg, rng);
    if (x == 0.0) {
      ++zeros;
    } else {
      positives.push_back(x);
    }
  }
  const double p0 = b / (a + b);
  const double se = std::sqrt(p0 * (1.0 - p0) / n);
  CHECK(std::fabs(static_cast<double>(zeros) / n - p0) <= 4.0 * se);
  auto direct = map_replicates<double>(
      102, 700000, static_cast<long>(positives.size()),
      [&](RngStream& r2) { return r2.beta_one(a + b); });
  CHECK(ks_two_sample("lemma4-one-step", positives, direct, 0.01, 102).pass);
}

TEST_CASE("partial sums are nondecreasing in the truncation level") {
  for (int rep = 0; rep < 50; ++rep) {
    double prev = 0.0;
    for (int R = 1; R <= 20; ++R) {
      StickBrokenBetaConfig cfg;
      cfg.a = 1.7;
      cfg.b = 0.6;
      cfg.truncation_R = R;
      RngStream rng(103, rep);  // same stream per R: shared draw prefix
      const double value = sample_stick_broken_beta(cfg, rng);
      CHECK(value >= prev);
      prev = value;
    }
  }
}

TEST_CASE("an unreachable keep probability yields zero") {
  StickBrokenBetaConfig cfg;
  cfg.a = 1e-300;  // keep probability below the uniform resolution
  cfg.b = 1.0;
  cfg.truncation_R = 50;
  RngStream rng(104);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_stick_broken_beta(cfg, rng) == 0.0);
  }
}

TEST_CASE("stick-broken beta rejects bad parameters") {
  StickBrokenBetaConfig cfg;
  cfg.a = -1.0;
  cfg.b = 1.0;
  RngStream rng(105);
  CHECK_THROWS_AS(sample_stick_broken_beta(cfg, rng), std::invalid_argument);
}

TEST_CASE("stick product equals exp(-Gamma) in distribution") {
  const long n = 10000;
  SUBCASE("r=1 alpha=1 is uniform") {
    auto product = map_replicates<double>(
        106, 0, n, [](RngStream& rng) { return sample_stick_product(1, 1.0, rng); });
    auto uniform = map_replicates<double>(
        106, 500000, n, [](RngStream& rng) { return rng.uniform01(); });
    CHECK(ks_two_sample("lemma5-uniform", product, uniform, 0.01, 106).pass);
  }
  SUBCASE("r=2 alpha=1") {
    auto product = map_replicates<double>(
        107, 0, n, [](RngStream& rng) { return sample_stick_product(2, 1.0, rng); });
    auto oracle = map_replicates<double>(
        107, 500000, n,
        [](RngStream& rng) { return std::exp(-rng.gamma(2.0, 1.0)); });
    CHECK(ks_two_sample("lemma5-r2", product, oracle, 0.01, 107).pass);
  }
  SUBCASE("r=5 alpha=2") {
    auto product = map_replicates<double>(
        108, 0, n, [](RngStream& rng) { return sample_stick_product(5, 2.0, rng); });
    auto oracle = map_replicates<double>(
        108, 500000, n,
        [](RngStream& rng) { return std::exp(-rng.gamma(5.0, 2.0)); });
    CHECK(ks_two_sample("lemma5-r5", product, oracle, 0.01, 108).pass);
  }
  RngStream rng(109);
  CHECK_THROWS_AS(sample_stick_product(0, 1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_stick_product(2, -1.0, rng), std::invalid_argument);
}

TEST_CASE("weighted beta combination reproduces Beta(a1+b1, a2+b2)") {
  const long n = 10000;
  auto combined = map_replicates<double>(110, 0, n, [](RngStream& rng) {
    return sample_product_beta(1.0, 1.0, 2.0, 3.0, rng);
  });
  auto direct = map_replicates<double>(
      110, 500000, n, [](RngStream& rng) { return rng.beta(3.0, 4.0); });
  CHECK(ks_two_sample("lemma6", combined, direct, 0.01, 110).pass);
}

TEST_CASE("degenerate component pairs reduce to the mixing beta") {
  // Beta(3,0) = 1 and Beta(0,2) = 0, so the combination equals eta3 alone.
  const long n = 10000;
  auto combined = map_replicates<double>(111, 0, n, [](RngStream& rng) {
    return sample_product_beta(3.0, 0.0, 0.0, 2.0, rng);
  });
  auto direct = map_replicates<double>(
      111, 500000, n, [](RngStream& rng) { return rng.beta(3.0, 2.0); });
  CHECK(ks_two_sample("lemma6-degenerate", combined, direct, 0.01, 111).pass);

  RngStream rng(112);
  // b1 = b2 = 0 forces eta3 = 1, returning eta1 exactly.
  auto eta1_only = sample_product_beta(2.0, 3.0, 0.0, 0.0, rng);
  CHECK(eta1_only > 0.0);
  CHECK(eta1_only < 1.0);
  CHECK_THROWS_AS(sample_product_beta(0.0, 0.0, 0.0, 0.0, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_product_beta(-1.0, 1.0, 1.0, 1.0, rng),
                  std::invalid_argument);
}

TEST_CASE("beta_or_degenerate conventions") {
  RngStream rng(113);
  CHECK(beta_or_degenerate(0.0, 2.0, rng) == 0.0);
  CHECK(beta_or_degenerate(2.0, 0.0, rng) == 1.0);
  CHECK(beta_or_degenerate(0.0, 0.0, rng) == 0.0);
  const double x = beta_or_degenerate(2.0, 2.0, rng);
  CHECK(x > 0.0);
  CHECK(x < 1.0);
}
