#include "bpsim/constructions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bpsim {

void StickBreakingConfig::validate() const {
  base.validate();
  if (R < 1) {
    throw std::invalid_argument("stick-breaking: R must be >= 1");
  }
  if (variant == StickVariant::power_law) {
    if (!base.concentration.is_constant()) {
      throw std::invalid_argument(
          "stick-breaking: power-law variant requires constant concentration");
    }
    if (!(beta_discount > 0.0 && beta_discount < 1.0)) {
      throw std::invalid_argument(
          "stick-breaking: power-law discount must lie in (0,1)");
    }
  }
}

void SieveConfig::validate() const {
  base.validate();
  if (!base.concentration.is_constant()) {
    throw std::invalid_argument("sieve: requires constant concentration");
  }
  if (K <= base.total_mass) {
    throw std::invalid_argument("sieve: K must exceed the total mass gamma");
  }
}

void ArrayConfig::validate() const {
  base.validate();
  if (!base.concentration.is_constant()) {
    throw std::invalid_argument(
        "truncated array: requires constant concentration");
  }
  if (K <= base.total_mass) {
    throw std::invalid_argument(
        "truncated array: K must exceed the total mass gamma");
  }
  if (R < 1) {
    throw std::invalid_argument("truncated array: R must be >= 1");
  }
}

DiscreteMeasure sample_dp_stick_breaking(const BaseMeasureSpec& base, int R,
                                         RngStream& rng) {
  base.validate();
  if (!base.concentration.is_constant()) {
    throw std::invalid_argument(
        "dp stick-breaking: requires constant concentration");
  }
  if (R < 1) {
    throw std::invalid_argument("dp stick-breaking: R must be >= 1");
  }
  const double alpha = base.concentration.constant_value();
  DiscreteMeasure out;
  out.construction_tag = ConstructionTag::dp;
  out.truncation_level = R;
  out.atoms.reserve(R);
  double remaining = 1.0;
  for (int i = 1; i <= R; ++i) {
    const double v = rng.beta_one(alpha);
    const double location = base.sample_location(rng);
    out.atoms.push_back(Atom{location, v * remaining, i, 1});
    remaining *= 1.0 - v;
  }
  return out;
}

DiscreteMeasure sample_bp_stick_breaking(const StickBreakingConfig& cfg,
                                         RngStream& rng) {
  cfg.validate();
  const double gamma = cfg.base.total_mass;
  DiscreteMeasure out;
  out.construction_tag = cfg.variant == StickVariant::power_law
                             ? ConstructionTag::power_law
                             : (cfg.variant == StickVariant::gamma_exponential
                                    ? ConstructionTag::gamma_exponential
                                    : ConstructionTag::stick_breaking);
  out.truncation_level = cfg.R;
  for (int i = 1; i <= cfg.R; ++i) {
    const long count = rng.poisson(gamma);
    for (long j = 1; j <= count; ++j) {
      const double location = cfg.base.sample_location(rng);
      const double alpha = cfg.base.concentration(location);
      double weight = 0.0;
      switch (cfg.variant) {
        case StickVariant::standard: {
          // The atom keeps the i-th break of its own stick.
          double remaining = 1.0;
          for (int l = 1; l < i; ++l) remaining *= 1.0 - rng.beta_one(alpha);
          weight = rng.beta_one(alpha) * remaining;
          break;
        }
        case StickVariant::power_law: {
          const double discount = cfg.beta_discount;
          double remaining = 1.0;
          for (int l = 1; l < i; ++l) {
            remaining *= 1.0 - rng.beta(1.0 - discount, alpha + l * discount);
          }
          weight = rng.beta(1.0 - discount, alpha + i * discount) * remaining;
          break;
        }
        case StickVariant::gamma_exponential: {
          const double v = rng.beta_one(alpha);
          weight = i == 1 ? v : v * std::exp(-rng.gamma(i - 1.0, alpha));
          break;
        }
      }
      out.atoms.push_back(Atom{location, weight, i, static_cast<int>(j)});
    }
  }
  return out;
}

DiscreteMeasure sample_bp_sieve(const SieveConfig& cfg, RngStream& rng) {
  cfg.validate();
  const double gamma = cfg.base.total_mass;
  const double alpha = cfg.base.concentration.constant_value();
  const double a = alpha * gamma / static_cast<double>(cfg.K);
  const double b = alpha * (1.0 - gamma / static_cast<double>(cfg.K));
  DiscreteMeasure out;
  out.construction_tag = ConstructionTag::sieve;
  out.truncation_level = 0;
  out.atoms.reserve(cfg.K);
  for (long k = 1; k <= cfg.K; ++k) {
    const double weight = rng.beta(a, b);
    const double location = cfg.base.sample_location(rng);
    out.atoms.push_back(Atom{location, weight, 1, static_cast<int>(k)});
  }
  return out;
}

DiscreteMeasure sample_bp_truncated_array(const ArrayConfig& cfg,
                                          RngStream& rng) {
  cfg.validate();
  const double gamma = cfg.base.total_mass;
  const double alpha = cfg.base.concentration.constant_value();
  const double p = gamma / static_cast<double>(cfg.K);
  DiscreteMeasure out;
  out.construction_tag = ConstructionTag::truncated_array;
  out.truncation_level = 0;
  for (long k = 1; k <= cfg.K; ++k) {
    const double location = cfg.base.sample_location(rng);
    double remaining = 1.0;
    double weight = 0.0;
    for (int i = 1; i <= cfg.R; ++i) {
      const double v = rng.beta_one(alpha);
      const bool y = rng.bernoulli(p);
      if (y) weight += v * remaining;
      remaining *= 1.0 - v;
    }
    if (weight > 0.0) {
      out.atoms.push_back(Atom{location, weight, 1, static_cast<int>(k)});
    }
  }
  return out;
}

int truncation_level_for_missing_mass(double alpha, double gamma, double tol) {
  if (!(alpha > 0.0) || !(gamma > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument(
        "truncation level: alpha, gamma, tol must be positive");
  }
  const double ratio = alpha / (1.0 + alpha);
  int r = 0;
  double mass = gamma;
  while (mass >= tol && r < 1000000) {
    mass *= ratio;
    ++r;
  }
  return r;
}

}  // namespace bpsim
