#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpsim/constructions.hpp"
#include "bpsim/levy.hpp"
#include "bpsim/posterior.hpp"
#include "bpsim/serialize.hpp"
#include "bpsim/verify.hpp"

namespace {

using namespace bpsim;

// BPSEED, when set, overrides --seed for every command.
void apply_seed_env(std::uint64_t& seed) {
  if (const char* env = std::getenv("BPSEED")) {
    seed = std::stoull(env);
  }
}

DiscreteMeasure run_sample(const std::string& construction, double alpha,
                           double gamma, int groups, long K,
                           double beta_discount, RngStream& rng) {
  BaseMeasureSpec base;
  base.total_mass = gamma;
  base.concentration = ConcentrationFn::constant(alpha);
  if (construction == "stick" || construction == "gammaexp" ||
      construction == "powerlaw") {
    StickBreakingConfig cfg;
    cfg.base = base;
    cfg.R = groups;
    if (construction == "gammaexp") {
      cfg.variant = StickVariant::gamma_exponential;
    } else if (construction == "powerlaw") {
      cfg.variant = StickVariant::power_law;
      cfg.beta_discount = beta_discount;
    }
    return sample_bp_stick_breaking(cfg, rng);
  }
  if (construction == "dp") {
    return sample_dp_stick_breaking(base, groups, rng);
  }
  if (construction == "sieve") {
    SieveConfig cfg;
    cfg.base = base;
    cfg.K = K;
    return sample_bp_sieve(cfg, rng);
  }
  if (construction == "array") {
    ArrayConfig cfg;
    cfg.base = base;
    cfg.K = K;
    cfg.R = groups;
    return sample_bp_truncated_array(cfg, rng);
  }
  throw CLI::ValidationError("--construction",
                             "unknown construction: " + construction);
}

int cmd_sample(const std::string& construction, double alpha, double gamma,
               int groups, long K, double beta_discount, std::uint64_t seed,
               std::uint64_t stream, const std::string& out_path) {
  RngStream rng(seed, stream);
  const DiscreteMeasure measure =
      run_sample(construction, alpha, gamma, groups, K, beta_discount, rng);
  const std::string text = to_json_string(measure);
  if (!out_path.empty()) write_file(out_path, text);
  std::cout << "construction=" << to_string(measure.construction_tag)
            << " atoms=" << measure.atoms.size()
            << " total_mass=" << measure.total_mass()
            << " seed=" << seed << " stream=" << stream << "\n";
  if (out_path.empty()) std::cout << text;
  return 0;
}

int cmd_truncate(double alpha, double gamma, int M, double r,
                 const std::string& likelihood, int R_max,
                 const std::string& method, int grid_n,
                 const std::string& out_path) {
  if (likelihood == "bernoulli") {
    r = 1.0;
  } else if (likelihood != "negbin") {
    throw CLI::ValidationError("--likelihood",
                               "expected bernoulli or negbin");
  }
  std::vector<TruncationReport> reports;
  if (method == "adaptive") {
    TruncationSweep sweep(alpha, gamma, M, r);
    reports = sweep.run(R_max);
  } else if (method == "simple") {
    SimpleFunctionGrid grid{grid_n};
    for (int R = 0; R <= R_max; ++R) {
      reports.push_back(truncation_error_exact(alpha, gamma, R, M, r, grid));
    }
  } else {
    throw CLI::ValidationError("--method", "expected adaptive or simple");
  }
  const std::string text = to_json_string(reports);
  if (!out_path.empty()) write_file(out_path, text);
  for (const TruncationReport& report : reports) {
    std::cout << "R=" << report.R << " exact_PE=" << report.exact_PE
              << " bound=" << report.analytic_bound
              << " missing_mass=" << report.expected_missing_mass << "\n";
  }
  if (out_path.empty()) std::cout << text;
  return 0;
}

int cmd_posterior(const std::string& input_path, const std::string& kind_name,
                  double r, double alpha, double gamma, int truncation,
                  long draws, std::uint64_t seed, std::uint64_t stream,
                  const std::string& out_path) {
  const LikelihoodKind kind = kind_name == "negbin"
                                  ? LikelihoodKind::negbin
                                  : LikelihoodKind::bernoulli;
  if (kind == LikelihoodKind::negbin && !(r > 0.0)) {
    throw CLI::ValidationError("--r", "negbin requires r > 0");
  }
  const std::string text = read_file(input_path);
  FeatureMatrix matrix;
  if (input_path.size() >= 4 &&
      input_path.substr(input_path.size() - 4) == ".csv") {
    matrix = feature_matrix_from_csv(text, kind, r);
  } else {
    matrix = feature_matrix_from_json(text);
    if (matrix.kind != kind) {
      throw CLI::ValidationError(
          "--kind", "input file kind does not match requested kind");
    }
  }
  PosteriorSpec spec;
  spec.base.total_mass = gamma;
  spec.base.concentration = ConcentrationFn::constant(alpha);
  spec.prior_truncation_R = truncation;
  spec.stats = count_stats(matrix);

  RngStream rng(seed, stream);
  std::vector<PosteriorDraw> out;
  out.reserve(draws);
  for (long k = 0; k < draws; ++k) {
    out.push_back(kind == LikelihoodKind::bernoulli
                      ? sample_posterior_bernoulli(spec, rng)
                      : sample_posterior_negbin(spec, rng));
  }
  const std::string result = to_json_string(out);
  if (!out_path.empty()) write_file(out_path, result);
  double mean_mass = 0.0;
  for (const PosteriorDraw& draw : out) mean_mass += draw.total_mass();
  std::cout << "draws=" << draws
            << " observed_atoms=" << (out.empty() ? 0 : out[0].observed.size())
            << " mean_total_mass=" << mean_mass / (draws > 0 ? draws : 1)
            << " seed=" << seed << "\n";
  if (out_path.empty()) std::cout << result;
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_path) {
  const std::vector<TestReport> reports = run_suite(suite, seed);
  for (const TestReport& report : reports) {
    std::cout << (report.pass ? "PASS " : "FAIL ") << report.name
              << " statistic=" << report.statistic
              << " threshold=" << report.threshold << "\n";
  }
  const bool ok = all_pass(reports);
  std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << " ("
            << reports.size() << " checks, suite=" << suite
            << ", seed=" << seed << ")\n";
  if (!out_path.empty()) write_file(out_path, suite_report_json(suite, reports));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta process simulation and analysis"};
  app.require_subcommand(1);

  std::string construction = "stick";
  double alpha = 1.0, gamma = 1.0, beta_discount = 0.5, r = 1.0;
  int groups = 20;
  long K = 100;
  std::uint64_t seed = 0, stream = 0;
  std::string out_path, input_path, likelihood = "bernoulli";
  std::string method = "adaptive", suite = "all", kind = "bernoulli";
  int M = 1, R_max = 5, grid_n = 1000, truncation = 0;
  long draws = 1;

  CLI::App* sample = app.add_subcommand("sample", "draw a construction");
  sample->add_option("--construction", construction,
                     "stick|gammaexp|powerlaw|dp|sieve|array")
      ->required();
  sample->add_option("--alpha", alpha, "concentration")->check(CLI::PositiveNumber);
  sample->add_option("--gamma", gamma, "base measure total mass")
      ->check(CLI::PositiveNumber);
  sample->add_option("--groups", groups, "truncation level R");
  sample->add_option("--K", K, "number of sieve/array atoms");
  sample->add_option("--beta-discount", beta_discount,
                     "power-law discount in (0,1)");
  sample->add_option("--seed", seed, "rng seed");
  sample->add_option("--stream", stream, "rng stream id");
  sample->add_option("--out", out_path, "output JSON path");

  CLI::App* truncate = app.add_subcommand("truncate", "truncation error sweep");
  truncate->add_option("--alpha", alpha, "concentration")
      ->check(CLI::PositiveNumber);
  truncate->add_option("--gamma", gamma, "base measure total mass")
      ->check(CLI::PositiveNumber);
  truncate->add_option("--M", M, "number of likelihood processes")
      ->check(CLI::PositiveNumber);
  truncate->add_option("--r", r, "negative binomial dispersion");
  truncate->add_option("--likelihood", likelihood, "bernoulli|negbin");
  truncate->add_option("--Rmax", R_max, "sweep truncation levels 0..Rmax");
  truncate->add_option("--method", method, "adaptive|simple");
  truncate->add_option("--grid-n", grid_n, "simple-function grid cells");
  truncate->add_option("--out", out_path, "output JSON path");

  CLI::App* posterior = app.add_subcommand("posterior", "conjugate posterior draws");
  posterior->add_option("--input", input_path, "feature matrix (json or csv)")
      ->required();
  posterior->add_option("--kind", kind, "bernoulli|negbin");
  posterior->add_option("--r", r, "negbin dispersion");
  posterior->add_option("--alpha", alpha, "concentration")
      ->check(CLI::PositiveNumber);
  posterior->add_option("--gamma", gamma, "base measure total mass")
      ->check(CLI::PositiveNumber);
  posterior->add_option("--truncation", truncation,
                        "stick-breaking level for the unobserved part "
                        "(0 = auto)");
  posterior->add_option("--draws", draws, "number of posterior draws")
      ->check(CLI::PositiveNumber);
  posterior->add_option("--seed", seed, "rng seed");
  posterior->add_option("--stream", stream, "rng stream id");
  posterior->add_option("--out", out_path, "output JSON path");

  CLI::App* verify = app.add_subcommand("verify", "statistical verification");
  verify->add_option("--suite", suite,
                     "constructions|levy|truncation|posterior|all");
  verify->add_option("--seed", seed, "rng seed")
      ->default_val(bpsim::seeds::kDefault);
  verify->add_option("--out", out_path, "aggregate report JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_seed_env(seed);
    if (sample->parsed()) {
      return cmd_sample(construction, alpha, gamma, groups, K, beta_discount,
                        seed, stream, out_path);
    }
    if (truncate->parsed()) {
      return cmd_truncate(alpha, gamma, M, r, likelihood, R_max, method,
                          grid_n, out_path);
    }
    if (posterior->parsed()) {
      return cmd_posterior(input_path, kind, r, alpha, gamma, truncation,
                           draws, seed, stream, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, seed, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
