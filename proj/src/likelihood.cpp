#include "bpsim/likelihood.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bpsim {

long FeatureMatrix::count(int row, int col) const {
  const auto& column = columns.at(col);
  auto it = std::lower_bound(
      column.begin(), column.end(), row,
      [](const std::pair<int, long>& entry, int r) { return entry.first < r; });
  if (it != column.end() && it->first == row) return it->second;
  return 0;
}

long FeatureMatrix::column_total(int col) const {
  long total = 0;
  for (const auto& [row, value] : columns.at(col)) total += value;
  return total;
}

void FeatureMatrix::validate() const {
  if (n_processes < 0) {
    throw std::invalid_argument("feature matrix: n_processes must be >= 0");
  }
  if (columns.size() != atoms.size()) {
    throw std::invalid_argument(
        "feature matrix: one column per atom required");
  }
  if (kind == LikelihoodKind::negbin && !(r > 0.0)) {
    throw std::invalid_argument("feature matrix: negbin needs r > 0");
  }
  for (const auto& column : columns) {
    int prev_row = -1;
    for (const auto& [row, value] : column) {
      if (row <= prev_row || row >= n_processes) {
        throw std::invalid_argument("feature matrix: bad row index");
      }
      if (value <= 0) {
        throw std::invalid_argument(
            "feature matrix: stored counts must be positive");
      }
      if (kind == LikelihoodKind::bernoulli && value > 1) {
        throw std::invalid_argument(
            "feature matrix: bernoulli entries must be 0 or 1");
      }
      prev_row = row;
    }
  }
}

FeatureMatrix sample_bernoulli_process(const DiscreteMeasure& H, int n,
                                       RngStream& rng) {
  if (n < 1) {
    throw std::invalid_argument("bernoulli process: n must be >= 1");
  }
  FeatureMatrix X;
  X.n_processes = n;
  X.kind = LikelihoodKind::bernoulli;
  X.atoms = H.atoms;
  X.columns.resize(H.atoms.size());
  for (std::size_t j = 0; j < H.atoms.size(); ++j) {
    const double pi = H.atoms[j].weight;
    if (!(pi > 0.0 && pi <= 1.0)) {
      throw std::invalid_argument(
          "bernoulli process: atom weight outside (0,1]: " +
          std::to_string(pi));
    }
    for (int i = 0; i < n; ++i) {
      if (rng.bernoulli(pi)) X.columns[j].emplace_back(i, 1);
    }
  }
  return X;
}

FeatureMatrix sample_negbin_process(const DiscreteMeasure& H, int n, double r,
                                    RngStream& rng) {
  if (n < 1) {
    throw std::invalid_argument("negbin process: n must be >= 1");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("negbin process: r must be positive");
  }
  FeatureMatrix X;
  X.n_processes = n;
  X.kind = LikelihoodKind::negbin;
  X.r = r;
  X.atoms = H.atoms;
  X.columns.resize(H.atoms.size());
  for (std::size_t j = 0; j < H.atoms.size(); ++j) {
    const double pi = H.atoms[j].weight;
    if (!(pi > 0.0 && pi < 1.0)) {
      throw std::invalid_argument(
          "negbin process: atom weight outside (0,1): " + std::to_string(pi));
    }
    for (int i = 0; i < n; ++i) {
      const long value = rng.negative_binomial(r, pi);
      if (value > 0) X.columns[j].emplace_back(i, value);
    }
  }
  return X;
}

CountStats count_stats(const FeatureMatrix& X) {
  X.validate();
  CountStats stats;
  stats.n = X.n_processes;
  stats.kind = X.kind;
  stats.r = X.r;
  stats.atoms = X.atoms;
  stats.m1.reserve(X.atoms.size());
  stats.m0.reserve(X.atoms.size());
  for (std::size_t j = 0; j < X.atoms.size(); ++j) {
    const long m1 = X.column_total(static_cast<int>(j));
    stats.m1.push_back(m1);
    if (X.kind == LikelihoodKind::bernoulli) {
      stats.m0.push_back(static_cast<double>(X.n_processes - m1));
    } else {
      stats.m0.push_back(static_cast<double>(X.n_processes) * X.r);
    }
  }
  return stats;
}

}  // namespace bpsim
