#pragma once

#include <utility>
#include <vector>

#include "bpsim/measure.hpp"
#include "bpsim/rng.hpp"

namespace bpsim {

enum class LikelihoodKind { bernoulli, negbin };

/// Counts from n likelihood processes over the atoms of a discrete measure.
/// Storage is sparse by column: most columns are all-zero when the measure
/// carries many small atoms.
struct FeatureMatrix {
  int n_processes = 0;
  LikelihoodKind kind = LikelihoodKind::bernoulli;
  double r = 1.0;  // negbin dispersion; ignored for bernoulli
  std::vector<Atom> atoms;
  // columns[j] lists (row, count) pairs with count > 0, rows ascending.
  std::vector<std::vector<std::pair<int, long>>> columns;

  long count(int row, int col) const;
  long column_total(int col) const;
  void validate() const;
};

/// X_i({theta}) ~ Bern(H({theta})) independently over rows and atoms.
/// Weights must lie in (0,1].
FeatureMatrix sample_bernoulli_process(const DiscreteMeasure& H, int n,
                                       RngStream& rng);

/// X_i({theta}) ~ NegBin(r, H({theta})) with mass proportional to
/// pi^k (1-pi)^r, i.e. mean r*pi/(1-pi). Weights must lie in (0,1): a unit
/// weight has infinite mean under this convention and is rejected.
FeatureMatrix sample_negbin_process(const DiscreteMeasure& H, int n, double r,
                                    RngStream& rng);

/// Per-atom count statistics feeding the posterior: m1 = sum of counts;
/// m0 = n - m1 for Bernoulli, the fixed n*r total for negbin (kept as a
/// real number since n*r need not be integral).
struct CountStats {
  int n = 0;
  LikelihoodKind kind = LikelihoodKind::bernoulli;
  double r = 1.0;
  std::vector<Atom> atoms;
  std::vector<long> m1;
  std::vector<double> m0;
};

CountStats count_stats(const FeatureMatrix& X);

}  // namespace bpsim
