#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cstdint>

#include "bpsim/measure.hpp"
#include "bpsim/serialize.hpp"

using namespace bpsim;

namespace {

DiscreteMeasure make_measure(std::initializer_list<Atom> atoms,
                             ConstructionTag tag = ConstructionTag::sieve) {
  DiscreteMeasure m;
  m.construction_tag = tag;
  m.atoms = atoms;
  return m;
}

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("measure_total over regions") {
  const DiscreteMeasure empty = make_measure({});
  CHECK(measure_total(empty, [](double) { return true; }) == 0.0);

  const DiscreteMeasure m =
      make_measure({Atom{0.2, 0.5, 1, 1}, Atom{0.7, 0.25, 1, 2}});
  CHECK(measure_total(m, [](double) { return true; }) == doctest::Approx(0.75));
  CHECK(measure_total(m, [](double x) { return x <= 0.5; }) ==
        doctest::Approx(0.5));
  CHECK(measure_total(m, [](double) { return false; }) == 0.0);

  // Additivity over disjoint regions.
  const double lo = measure_total(m, [](double x) { return x < 0.5; });
  const double hi = measure_total(m, [](double x) { return x >= 0.5; });
  CHECK(lo + hi == doctest::Approx(m.total_mass()));
}

TEST_CASE("partition_union concatenates disjoint parts") {
  CHECK(partition_union({make_measure({}), make_measure({})}).atoms.empty());

  const DiscreteMeasure a = make_measure(
      {Atom{0.1, 0.3, 1, 1}, Atom{0.2, 0.1, 1, 2}, Atom{0.3, 0.2, 2, 1}});
  const DiscreteMeasure b = make_measure({Atom{0.6, 0.4, 1, 1},
                                          Atom{0.7, 0.1, 1, 2},
                                          Atom{0.8, 0.1, 2, 1},
                                          Atom{0.9, 0.2, 3, 1}});
  const DiscreteMeasure joined = partition_union({a, b});
  CHECK(joined.atoms.size() == 7);
  CHECK(joined.total_mass() ==
        doctest::Approx(a.total_mass() + b.total_mass()));
  REQUIRE(joined.part_offsets.size() == 2);
  CHECK(joined.part_offsets[0] == 0);
  CHECK(joined.part_offsets[1] == 3);
  // Group/index metadata preserved per part.
  CHECK(joined.atoms[2].group == 2);
  CHECK(joined.atoms[6].group == 3);

  const DiscreteMeasure clash = make_measure({Atom{0.6, 0.5, 1, 1}});
  CHECK_THROWS_AS(partition_union({a, b, clash}), std::invalid_argument);
}

TEST_CASE("concentration function validation") {
  CHECK_THROWS_AS(ConcentrationFn::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConcentrationFn::constant(-2.0), std::invalid_argument);
  const ConcentrationFn c = ConcentrationFn::constant(2.5);
  CHECK(c.is_constant());
  CHECK(c(0.3) == 2.5);
  CHECK(c.constant_value() == 2.5);

  const ConcentrationFn g = ConcentrationFn::general(
      [](double x) { return 1.0 + x; }, 2.0);
  CHECK_FALSE(g.is_constant());
  CHECK(g(0.5) == doctest::Approx(1.5));
  CHECK_THROWS_AS(g(5.0), std::domain_error);  // exceeds upper bound
  CHECK_THROWS_AS(g.constant_value(), std::logic_error);

  BaseMeasureSpec bad;
  bad.total_mass = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("construction tags round trip") {
  for (ConstructionTag tag :
       {ConstructionTag::stick_breaking, ConstructionTag::gamma_exponential,
        ConstructionTag::sieve, ConstructionTag::truncated_array,
        ConstructionTag::dp, ConstructionTag::power_law}) {
    CHECK(construction_tag_from_string(to_string(tag)) == tag);
  }
  CHECK_THROWS_AS(construction_tag_from_string("nope"), std::invalid_argument);
}

TEST_CASE("json round trip is bit-exact for weights and locations") {
  RngStream rng(99);
  DiscreteMeasure m;
  m.construction_tag = ConstructionTag::stick_breaking;
  m.truncation_level = 5;
  for (int i = 0; i < 200; ++i) {
    m.atoms.push_back(
        Atom{rng.uniform01(), rng.beta(0.37, 1.91), 1 + i % 5, 1 + i / 5});
  }
  const DiscreteMeasure back = discrete_measure_from_json(to_json_string(m));
  CHECK(back.construction_tag == m.construction_tag);
  CHECK(back.truncation_level == m.truncation_level);
  REQUIRE(back.atoms.size() == m.atoms.size());
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    CHECK(same_bits(back.atoms[i].weight, m.atoms[i].weight));
    CHECK(same_bits(back.atoms[i].location, m.atoms[i].location));
    CHECK(back.atoms[i].group == m.atoms[i].group);
    CHECK(back.atoms[i].index_in_group == m.atoms[i].index_in_group);
  }
}
