#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bpsim/rng.hpp"

namespace bpsim {

/// Concentration function alpha(theta): either a constant or an arbitrary
/// strictly positive function with a known finite upper bound.
class ConcentrationFn {
public:
  static ConcentrationFn constant(double alpha);
  static ConcentrationFn general(std::function<double(double)> eval,
                                 double upper_bound);

  double operator()(double location) const;
  bool is_constant() const noexcept { return constant_; }
  /// Value of a constant concentration; throws for a general one.
  double constant_value() const;
  double upper_bound() const noexcept { return upper_bound_; }

private:
  ConcentrationFn() = default;
  bool constant_ = true;
  double value_ = 1.0;
  double upper_bound_ = 1.0;
  std::function<double(double)> eval_;
};

/// Base measure mu with total mass gamma = mu(Theta) plus the concentration
/// function. Locations default to Uniform(0,1) draws, which keeps the base
/// diffuse (draws are almost surely distinct).
struct BaseMeasureSpec {
  double total_mass = 1.0;
  ConcentrationFn concentration = ConcentrationFn::constant(1.0);
  std::function<double(RngStream&)> location_sampler;  // null = uniform01

  double sample_location(RngStream& rng) const {
    return location_sampler ? location_sampler(rng) : rng.uniform01();
  }
  void validate() const;
};

enum class ConstructionTag {
  stick_breaking,
  gamma_exponential,
  sieve,
  truncated_array,
  dp,
  power_law,
};

std::string to_string(ConstructionTag tag);
ConstructionTag construction_tag_from_string(const std::string& name);

struct Atom {
  double location = 0.0;
  double weight = 0.0;
  int group = 1;
  int index_in_group = 1;
};

/// A finite list of weighted atoms. truncation_level = 0 means the
/// construction was not group-truncated (sieve, truncated array).
struct DiscreteMeasure {
  ConstructionTag construction_tag = ConstructionTag::stick_breaking;
  int truncation_level = 0;
  std::vector<Atom> atoms;
  // Start offsets of each part when built by partition_union; empty
  // otherwise. Atom order is preserved per part.
  std::vector<std::size_t> part_offsets;

  double total_mass() const;
};

/// Sum of atom weights whose location satisfies the region predicate.
double measure_total(const DiscreteMeasure& m,
                     const std::function<bool(double)>& region);

/// Concatenation of measures built over disjoint location regions. Throws
/// std::invalid_argument when two parts share an atom location.
DiscreteMeasure partition_union(const std::vector<DiscreteMeasure>& parts);

}  // namespace bpsim
