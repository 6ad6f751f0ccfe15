#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "support/json_schema_lite.hpp"

#include "bpsim/serialize.hpp"

using namespace bpsim;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = BPSIM_CLI_PATH;
const fs::path kSchemaDir = BPSIM_SCHEMA_DIR;

int run(const std::string& command) {
  const int status = std::system(command.c_str());
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "bpsim_cli_test";
  fs::create_directories(dir);
  return dir;
}

schema_lite::Registry load_registry() {
  schema_lite::Registry registry;
  for (const auto& entry : fs::directory_iterator(kSchemaDir)) {
    const json schema = json::parse(read_file(entry.path().string()));
    registry[schema.at("$id").get<std::string>()] = schema;
  }
  return registry;
}

void check_schema(const std::string& schema_file, const json& instance) {
  static const schema_lite::Registry registry = load_registry();
  const json schema =
      json::parse(read_file((kSchemaDir / schema_file).string()));
  const std::string err = schema_lite::validate(schema, instance, registry);
  INFO(err);
  CHECK(err.empty());
}

}  // namespace

TEST_CASE("sample is reproducible and schema-valid") {
  const fs::path dir = temp_dir();
  const std::string out1 = (dir / "m1.json").string();
  const std::string out2 = (dir / "m2.json").string();
  const std::string base = kCli +
      " sample --construction stick --alpha 1 --gamma 1 --groups 20 --seed 7";
  CHECK(run(base + " --out " + out1 + " > /dev/null") == 0);
  CHECK(run(base + " --out " + out2 + " > /dev/null") == 0);
  CHECK(read_file(out1) == read_file(out2));

  const json measure = json::parse(read_file(out1));
  check_schema("discrete_measure-v1.schema.json", measure);
  for (const json& atom : measure["atoms"]) {
    CHECK(atom["group"].get<int>() <= 20);
  }

  // Different seed changes the bytes.
  const std::string out3 = (dir / "m3.json").string();
  CHECK(run(kCli +
            " sample --construction stick --alpha 1 --gamma 1 --groups 20 "
            "--seed 8 --out " + out3 + " > /dev/null") == 0);
  CHECK(read_file(out1) != read_file(out3));
}

TEST_CASE("every construction flows through the cli") {
  const fs::path dir = temp_dir();
  for (const std::string c : {"stick", "gammaexp", "powerlaw", "dp", "sieve",
                              "array"}) {
    const std::string out = (dir / ("c_" + c + ".json")).string();
    const std::string cmd = kCli + " sample --construction " + c +
        " --alpha 1 --gamma 1 --groups 10 --K 50 --beta-discount 0.4 --seed 3 "
        "--out " + out + " > /dev/null";
    CHECK(run(cmd) == 0);
    check_schema("discrete_measure-v1.schema.json",
                 json::parse(read_file(out)));
  }
}

TEST_CASE("invalid arguments exit nonzero") {
  CHECK(run(kCli + " sample --construction sieve --K 0 --gamma 1 "
                   "2> /dev/null") != 0);
  CHECK(run(kCli + " sample --construction nope 2> /dev/null") != 0);
  CHECK(run(kCli + " verify --suite bogus 2> /dev/null") != 0);
  CHECK(run(kCli + " truncate --likelihood negbin --r -2 2> /dev/null") != 0);
  CHECK(run(kCli + " posterior --input /nonexistent.json 2> /dev/null") != 0);
}

TEST_CASE("truncate sweep reproduces the closed forms") {
  const fs::path dir = temp_dir();
  const std::string out = (dir / "sweep.json").string();
  CHECK(run(kCli + " truncate --alpha 1 --gamma 1 --M 1 --Rmax 5 --out " +
            out + " > /dev/null") == 0);
  const json reports = json::parse(read_file(out));
  check_schema("truncation_reports-v1.schema.json", reports);
  REQUIRE(reports.size() == 6);
  CHECK(reports[1]["exact_PE"].get<double>() ==
        doctest::Approx(0.393469).epsilon(1e-5));
  CHECK(reports[5]["analytic_bound"].get<double>() ==
        doctest::Approx(0.030767).epsilon(1e-4));

  // Negative binomial dispatch uses the M r exponent.
  const std::string nb = (dir / "sweep_nb.json").string();
  CHECK(run(kCli + " truncate --alpha 1 --gamma 1 --M 1 --likelihood negbin "
                   "--r 2 --Rmax 0 --out " + nb + " > /dev/null") == 0);
  const json nb_reports = json::parse(read_file(nb));
  REQUIRE(nb_reports.size() == 1);
  CHECK(nb_reports[0]["analytic_bound"].get<double>() ==
        doctest::Approx(-std::expm1(-2.0)).epsilon(1e-9));

  // Simple-function method writes grid provenance.
  const std::string sf = (dir / "sweep_sf.json").string();
  CHECK(run(kCli + " truncate --alpha 1 --gamma 1 --M 1 --Rmax 1 "
                   "--method simple --grid-n 200 --out " + sf +
            " > /dev/null") == 0);
  const json sf_reports = json::parse(read_file(sf));
  check_schema("truncation_reports-v1.schema.json", sf_reports);
  CHECK(sf_reports[0]["method"] == "simple_function");
  CHECK(sf_reports[0]["n"] == 200);
}

TEST_CASE("posterior command consumes json and csv matrices") {
  const fs::path dir = temp_dir();
  // 3x1 Bernoulli matrix of ones at a single atom.
  FeatureMatrix matrix;
  matrix.n_processes = 3;
  matrix.kind = LikelihoodKind::bernoulli;
  matrix.atoms = {Atom{0.5, 0.5, 1, 1}};
  matrix.columns = {{{0, 1}, {1, 1}, {2, 1}}};
  const std::string in_json = (dir / "x.json").string();
  write_file(in_json, to_json_string(matrix));
  const std::string in_csv = (dir / "x.csv").string();
  write_file(in_csv, to_csv_string(matrix));

  const std::string out1 = (dir / "p1.json").string();
  const std::string out2 = (dir / "p2.json").string();
  const std::string cmd = kCli + " posterior --input " + in_json +
      " --alpha 2 --gamma 1 --draws 3 --seed 11 --out ";
  CHECK(run(cmd + out1 + " > /dev/null") == 0);
  CHECK(run(cmd + out2 + " > /dev/null") == 0);
  CHECK(read_file(out1) == read_file(out2));
  const json draws = json::parse(read_file(out1));
  check_schema("posterior_draws-v1.schema.json", draws);
  REQUIRE(draws.size() == 3);
  for (const json& draw : draws) {
    CHECK(draw["observed"].size() == 1);
  }

  const std::string out_csv = (dir / "p3.json").string();
  CHECK(run(kCli + " posterior --input " + in_csv +
            " --alpha 2 --gamma 1 --seed 11 --out " + out_csv +
            " > /dev/null") == 0);
  check_schema("posterior_draws-v1.schema.json",
               json::parse(read_file(out_csv)));

  // Empty matrix: prior draws, no observed atoms.
  FeatureMatrix empty;
  empty.n_processes = 0;
  empty.kind = LikelihoodKind::bernoulli;
  const std::string in_empty = (dir / "empty.json").string();
  write_file(in_empty, to_json_string(empty));
  const std::string out_empty = (dir / "p_empty.json").string();
  CHECK(run(kCli + " posterior --input " + in_empty +
            " --alpha 1 --gamma 1 --truncation 5 --seed 2 --out " + out_empty +
            " > /dev/null") == 0);
  const json prior_draws = json::parse(read_file(out_empty));
  CHECK(prior_draws[0]["observed"].empty());
  CHECK(prior_draws[0]["unobserved"]["atoms"].size() > 0);

  // Negbin with nonpositive r is rejected.
  CHECK(run(kCli + " posterior --input " + in_json +
            " --kind negbin --r 0 2> /dev/null") != 0);
}

TEST_CASE("BPSEED overrides the seed flag") {
  const fs::path dir = temp_dir();
  const std::string a = (dir / "env_a.json").string();
  const std::string b = (dir / "env_b.json").string();
  CHECK(run("BPSEED=5 " + kCli +
            " sample --construction stick --seed 7 --out " + a +
            " > /dev/null") == 0);
  CHECK(run(kCli + " sample --construction stick --seed 5 --out " + b +
            " > /dev/null") == 0);
  CHECK(read_file(a) == read_file(b));
}
