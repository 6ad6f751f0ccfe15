#pragma once

#include <string>
#include <vector>

#include "bpsim/levy.hpp"
#include "bpsim/likelihood.hpp"
#include "bpsim/measure.hpp"
#include "bpsim/posterior.hpp"
#include "bpsim/verify.hpp"

namespace bpsim {

// JSON layouts are documented by the schemas under /schemas; weights and
// locations round-trip bit-exactly (shortest-representation doubles).

std::string to_json_string(const DiscreteMeasure& measure);
DiscreteMeasure discrete_measure_from_json(const std::string& text);

std::string to_json_string(const FeatureMatrix& matrix);
FeatureMatrix feature_matrix_from_json(const std::string& text);

/// CSV: one header row of atom locations, then one row of counts per
/// process. Kind and dispersion are not part of the CSV payload.
std::string to_csv_string(const FeatureMatrix& matrix);
FeatureMatrix feature_matrix_from_csv(const std::string& text,
                                      LikelihoodKind kind, double r = 1.0);

std::string to_json_string(const TruncationReport& report);
std::string to_json_string(const std::vector<TruncationReport>& reports);

std::string to_json_string(const PosteriorDraw& draw);
std::string to_json_string(const std::vector<PosteriorDraw>& draws);

std::string to_json_string(const TestReport& report);
std::string suite_report_json(const std::string& suite,
                              const std::vector<TestReport>& reports);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace bpsim
