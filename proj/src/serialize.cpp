#include "bpsim/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace bpsim {

namespace {

using nlohmann::json;

std::string shortest(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad numeric field: '" + s + "'");
  }
  return out;
}

json atom_to_json(const Atom& atom) {
  return json{{"location", atom.location},
              {"weight", atom.weight},
              {"group", atom.group},
              {"index_in_group", atom.index_in_group}};
}

Atom atom_from_json(const json& j) {
  Atom atom;
  atom.location = j.at("location").get<double>();
  atom.weight = j.at("weight").get<double>();
  atom.group = j.at("group").get<int>();
  atom.index_in_group = j.at("index_in_group").get<int>();
  return atom;
}

std::string kind_name(LikelihoodKind kind) {
  return kind == LikelihoodKind::bernoulli ? "bernoulli" : "negbin";
}

LikelihoodKind kind_from_name(const std::string& name) {
  if (name == "bernoulli") return LikelihoodKind::bernoulli;
  if (name == "negbin") return LikelihoodKind::negbin;
  throw std::invalid_argument("unknown likelihood kind: " + name);
}

}  // namespace

std::string to_json_string(const DiscreteMeasure& measure) {
  json j;
  j["construction_tag"] = to_string(measure.construction_tag);
  j["truncation_level"] = measure.truncation_level;
  json atoms = json::array();
  for (const Atom& atom : measure.atoms) atoms.push_back(atom_to_json(atom));
  j["atoms"] = std::move(atoms);
  if (!measure.part_offsets.empty()) j["part_offsets"] = measure.part_offsets;
  return j.dump(2) + "\n";
}

DiscreteMeasure discrete_measure_from_json(const std::string& text) {
  const json j = json::parse(text);
  DiscreteMeasure measure;
  measure.construction_tag =
      construction_tag_from_string(j.at("construction_tag").get<std::string>());
  measure.truncation_level = j.at("truncation_level").get<int>();
  for (const json& atom : j.at("atoms")) {
    measure.atoms.push_back(atom_from_json(atom));
  }
  if (j.contains("part_offsets")) {
    measure.part_offsets = j["part_offsets"].get<std::vector<std::size_t>>();
  }
  return measure;
}

std::string to_json_string(const FeatureMatrix& matrix) {
  json j;
  j["kind"] = kind_name(matrix.kind);
  j["n"] = matrix.n_processes;
  if (matrix.kind == LikelihoodKind::negbin) j["r"] = matrix.r;
  json atoms = json::array();
  for (const Atom& atom : matrix.atoms) atoms.push_back(atom_to_json(atom));
  j["atoms"] = std::move(atoms);
  json counts = json::array();
  for (std::size_t col = 0; col < matrix.columns.size(); ++col) {
    for (const auto& [row, value] : matrix.columns[col]) {
      counts.push_back(json{{"row", row},
                            {"col", static_cast<long>(col)},
                            {"count", value}});
    }
  }
  j["counts"] = std::move(counts);
  return j.dump(2) + "\n";
}

FeatureMatrix feature_matrix_from_json(const std::string& text) {
  const json j = json::parse(text);
  FeatureMatrix matrix;
  matrix.kind = kind_from_name(j.at("kind").get<std::string>());
  matrix.n_processes = j.at("n").get<int>();
  if (matrix.kind == LikelihoodKind::negbin) matrix.r = j.at("r").get<double>();
  for (const json& atom : j.at("atoms")) {
    matrix.atoms.push_back(atom_from_json(atom));
  }
  matrix.columns.resize(matrix.atoms.size());
  for (const json& entry : j.at("counts")) {
    const int row = entry.at("row").get<int>();
    const long col = entry.at("col").get<long>();
    const long count = entry.at("count").get<long>();
    if (col < 0 || col >= static_cast<long>(matrix.columns.size())) {
      throw std::invalid_argument("feature matrix: column index " +
                                  std::to_string(col) + " out of range");
    }
    matrix.columns[col].emplace_back(row, count);
  }
  for (auto& column : matrix.columns) {
    std::sort(column.begin(), column.end());
  }
  matrix.validate();
  return matrix;
}

std::string to_csv_string(const FeatureMatrix& matrix) {
  std::ostringstream out;
  for (std::size_t j = 0; j < matrix.atoms.size(); ++j) {
    if (j) out << ',';
    out << shortest(matrix.atoms[j].location);
  }
  out << '\n';
  for (int i = 0; i < matrix.n_processes; ++i) {
    for (std::size_t j = 0; j < matrix.atoms.size(); ++j) {
      if (j) out << ',';
      out << matrix.count(i, static_cast<int>(j));
    }
    out << '\n';
  }
  return out.str();
}

FeatureMatrix feature_matrix_from_csv(const std::string& text,
                                      LikelihoodKind kind, double r) {
  FeatureMatrix matrix;
  matrix.kind = kind;
  matrix.r = r;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("feature matrix csv: missing header");
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(s);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    return fields;
  };
  int id = 1;
  for (const std::string& cell : split(line)) {
    Atom atom;
    atom.location = parse_double(cell);
    atom.weight = 1.0;  // identities only; weights are not part of the CSV
    atom.group = 1;
    atom.index_in_group = id++;
    matrix.atoms.push_back(atom);
  }
  matrix.columns.resize(matrix.atoms.size());
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != matrix.atoms.size()) {
      throw std::invalid_argument(
          "feature matrix csv: row " + std::to_string(row + 1) + " has " +
          std::to_string(fields.size()) + " fields, expected " +
          std::to_string(matrix.atoms.size()));
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const long value = std::stol(fields[j]);
      if (value < 0) {
        throw std::invalid_argument("feature matrix csv: negative count in row " +
                                    std::to_string(row + 1));
      }
      if (value > 0) matrix.columns[j].emplace_back(row, value);
    }
    ++row;
  }
  matrix.n_processes = row;
  matrix.validate();
  return matrix;
}

namespace {

json truncation_report_to_json(const TruncationReport& report) {
  json j;
  j["R"] = report.R;
  j["M"] = report.M;
  j["r"] = report.r;
  j["exact_PE"] = report.exact_PE;
  j["analytic_bound"] = report.analytic_bound;
  j["expected_missing_mass"] = report.expected_missing_mass;
  j["quadrature_error"] = report.quadrature_error;
  j["method"] = report.method;
  if (report.method == "adaptive") {
    j["tolerance"] = report.tolerance;
  } else {
    j["n"] = report.grid_n;
  }
  j["I_max"] = report.tail_cutoff;
  j["remainder_bound"] = report.remainder_bound;
  return j;
}

}  // namespace

std::string to_json_string(const TruncationReport& report) {
  return truncation_report_to_json(report).dump(2) + "\n";
}

std::string to_json_string(const std::vector<TruncationReport>& reports) {
  json arr = json::array();
  for (const TruncationReport& report : reports) {
    arr.push_back(truncation_report_to_json(report));
  }
  return arr.dump(2) + "\n";
}

namespace {

json posterior_draw_to_json(const PosteriorDraw& draw) {
  json observed = json::array();
  for (const WeightedAtom& atom : draw.observed) {
    observed.push_back(json{{"location", atom.location},
                            {"weight", atom.weight},
                            {"observed", true}});
  }
  json j;
  j["observed"] = std::move(observed);
  json unobserved = json::parse(to_json_string(draw.unobserved));
  j["unobserved"] = std::move(unobserved);
  return j;
}

}  // namespace

std::string to_json_string(const PosteriorDraw& draw) {
  return posterior_draw_to_json(draw).dump(2) + "\n";
}

std::string to_json_string(const std::vector<PosteriorDraw>& draws) {
  json arr = json::array();
  for (const PosteriorDraw& draw : draws) {
    arr.push_back(posterior_draw_to_json(draw));
  }
  return arr.dump(2) + "\n";
}

namespace {

json test_report_to_json(const TestReport& report) {
  json j;
  j["name"] = report.name;
  j["statistic"] = report.statistic;
  j["threshold"] = report.threshold;
  j["n_samples"] = report.n_samples;
  j["seed"] = report.seed;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["target"] = report.target;
  j["tolerance"] = report.tolerance;
  j["detail"] = report.detail;
  return j;
}

}  // namespace

std::string to_json_string(const TestReport& report) {
  return test_report_to_json(report).dump(2) + "\n";
}

std::string suite_report_json(const std::string& suite,
                              const std::vector<TestReport>& reports) {
  json j;
  j["suite"] = suite;
  long n_pass = 0;
  json arr = json::array();
  for (const TestReport& report : reports) {
    if (report.pass) ++n_pass;
    arr.push_back(test_report_to_json(report));
  }
  j["n_pass"] = n_pass;
  j["n_fail"] = static_cast<long>(reports.size()) - n_pass;
  j["all_pass"] = n_pass == static_cast<long>(reports.size());
  j["reports"] = std::move(arr);
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bpsim
