#include "bpsim/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace bpsim {

ConcentrationFn ConcentrationFn::constant(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument(
        "ConcentrationFn: constant alpha must be positive and finite");
  }
  ConcentrationFn fn;
  fn.constant_ = true;
  fn.value_ = alpha;
  fn.upper_bound_ = alpha;
  return fn;
}

ConcentrationFn ConcentrationFn::general(std::function<double(double)> eval,
                                         double upper_bound) {
  if (!eval) {
    throw std::invalid_argument("ConcentrationFn: eval must be callable");
  }
  if (!(upper_bound > 0.0) || !std::isfinite(upper_bound)) {
    throw std::invalid_argument(
        "ConcentrationFn: upper_bound must be positive and finite");
  }
  ConcentrationFn fn;
  fn.constant_ = false;
  fn.upper_bound_ = upper_bound;
  fn.eval_ = std::move(eval);
  return fn;
}

double ConcentrationFn::operator()(double location) const {
  if (constant_) return value_;
  const double a = eval_(location);
  if (!(a > 0.0) || a > upper_bound_) {
    throw std::domain_error(
        "ConcentrationFn: eval(theta) must lie in (0, upper_bound]");
  }
  return a;
}

double ConcentrationFn::constant_value() const {
  if (!constant_) {
    throw std::logic_error(
        "ConcentrationFn: constant_value() on a general concentration");
  }
  return value_;
}

void BaseMeasureSpec::validate() const {
  if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
    throw std::invalid_argument(
        "BaseMeasureSpec: total_mass must be positive and finite");
  }
}

std::string to_string(ConstructionTag tag) {
  switch (tag) {
    case ConstructionTag::stick_breaking: return "stick_breaking";
    case ConstructionTag::gamma_exponential: return "gamma_exponential";
    case ConstructionTag::sieve: return "sieve";
    case ConstructionTag::truncated_array: return "truncated_array";
    case ConstructionTag::dp: return "dp";
    case ConstructionTag::power_law: return "power_law";
  }
  throw std::logic_error("unknown ConstructionTag");
}

ConstructionTag construction_tag_from_string(const std::string& name) {
  if (name == "stick_breaking") return ConstructionTag::stick_breaking;
  if (name == "gamma_exponential") return ConstructionTag::gamma_exponential;
  if (name == "sieve") return ConstructionTag::sieve;
  if (name == "truncated_array") return ConstructionTag::truncated_array;
  if (name == "dp") return ConstructionTag::dp;
  if (name == "power_law") return ConstructionTag::power_law;
  throw std::invalid_argument("unknown construction tag: " + name);
}

double DiscreteMeasure::total_mass() const {
  double sum = 0.0;
  for (const Atom& atom : atoms) sum += atom.weight;
  return sum;
}

double measure_total(const DiscreteMeasure& m,
                     const std::function<bool(double)>& region) {
  double sum = 0.0;
  for (const Atom& atom : m.atoms) {
    if (region(atom.location)) sum += atom.weight;
  }
  return sum;
}

DiscreteMeasure partition_union(const std::vector<DiscreteMeasure>& parts) {
  DiscreteMeasure out;
  if (!parts.empty()) {
    out.construction_tag = parts.front().construction_tag;
    out.truncation_level = parts.front().truncation_level;
  }
  std::unordered_set<double> seen;
  for (const DiscreteMeasure& part : parts) {
    out.part_offsets.push_back(out.atoms.size());
    for (const Atom& atom : part.atoms) {
      if (!seen.insert(atom.location).second) {
        throw std::invalid_argument(
            "partition_union: parts share an atom location; regions must be "
            "disjoint");
      }
      out.atoms.push_back(atom);
    }
  }
  return out;
}

}  // namespace bpsim
