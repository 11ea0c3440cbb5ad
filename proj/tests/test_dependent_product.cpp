#include "doctest.h"

#include "dp_oracles.hpp"

using namespace bipoly;

TEST_CASE("dependent product basics") {
  auto c2 = make_lattice(builtin_group("C2"));
  const GSet free = coset_space(c2, 1, 0);
  // Π along C_2/e -> * of the fold: functions C_2 -> {a, b}, two fixed and one free orbit.
  const GMap pi = dependent_product(to_point(free), fold_map(free));
  CHECK(pi.source().size() == 4);
  CHECK(fingerprint(pi.source()) == Fingerprint{{0, 1}, {1, 2}});
  // Empty fiber contributes the single empty section.
  const GMap e = dependent_product(from_empty(free), identity_map(GSet::empty(c2, 1)));
  CHECK(e.source().size() == 2);
  CHECK_THROWS_AS(dependent_product(to_point(free), identity_map(GSet::trivial(c2, 1, 1))), InputError);
  CHECK_THROWS_AS(dependent_product(to_point(free), fold_map(free, 4), 8), ResourceError);
}

TEST_CASE("exponential diagram commutes") {
  auto c4 = make_lattice(builtin_group("C4"));
  for (const auto& inst : oracle::instances(c4, 8)) {
    auto ed = exponential_diagram(inst.g, inst.h);
    CHECK(compose(inst.h, ed.f_prime).points() == ed.to_t.points());
    CHECK(compose(inst.g, ed.to_t).points() == compose(ed.h_prime, ed.g_prime).points());
  }
}

TEST_CASE("section enumeration matches closed forms") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    oracle::Tally t;
    oracle::empty_map_case(lat, t);
    oracle::fold_case(lat, t);
    oracle::orbit_case(lat, t);
    const auto inst = oracle::instances(lat, 6);
    oracle::disjoint_union_case(inst, t, std::max<std::size_t>(1, inst.size() / 40));
    MESSAGE(std::string(name), " instances: ", t.instances, " (", inst.size(), " g,h pairs)");
    CHECK(t.instances > 100);
    CHECK(t.mismatches == 0);
  }
}

TEST_CASE("iso over a base detects differences") {
  auto c4 = make_lattice(builtin_group("C4"));
  const GSet x = coset_space(c4, 2, 0);
  const GSet two = gset_from_orbit_types(c4, 2, {2, 2});
  const auto maps = oracle::all_maps(x, two);
  REQUIRE(maps.size() == 2);
  CHECK_FALSE(oracle::iso_over(maps[0], maps[1]));
  CHECK(oracle::iso_over(maps[0], maps[0]));
  CHECK(oracle::all_maps(two, x).empty());
}
