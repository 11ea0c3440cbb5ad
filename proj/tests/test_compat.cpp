#include "doctest.h"

#include "bipoly/compat.hpp"

using namespace bipoly;

namespace {

std::vector<TransferSystem> systems_of(const LatticePtr& lat) { return enumerate_transfer_systems(lat); }

}  // namespace

TEST_CASE("coinduced orbit types match explicit coinduction") {
  for (const char* name : {"C4", "C6", "S3", "Q8"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    for (int k = 0; k < lat->count(); ++k)
      for (int h = 0; h < lat->count(); ++h) {
        if (!lat->leq(k, h) || lat->index(k, h) > 4) continue;
        for (int m : lat->subgroups_of(k)) {
          if (lat->rep_under(k, m) != m) continue;
          const std::vector<int> orbits = {k, m};
          const GSet t = gset_from_orbit_types(lat, k, orbits);
          std::map<int, long long> explicit_types;
          for (const auto& ot : fingerprint(coinduce(h, t))) explicit_types[ot.stabilizer_class] = ot.multiplicity;
          std::vector<std::pair<int, int>> mult = {{k, 1}, {m, 1}};
          if (m == k) mult = {{k, 2}};
          CHECK(coinduced_orbit_types(*lat, k, h, mult) == explicit_types);
        }
      }
  }
}

TEST_CASE("compatibility examples") {
  auto c2 = make_lattice(builtin_group("C2"));
  const auto tr = TransferSystem::trivial(c2);
  const auto gen = TransferSystem::complete(c2);

  auto r = is_compatible(tr, gen);
  CHECK_FALSE(r.compatible);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->k == 0);
  CHECK(r.witness->h == 1);
  // Smallest failing T: the two-point trivial set.
  CHECK(r.witness->t_orbits == std::vector<int>{0, 0});
  CHECK(r.witness->t.size() == 2);
  CHECK(r.witness->offending.stabilizer_class == 0);

  for (const char* name : {"C4", "C6", "S3", "C8"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    const auto t = TransferSystem::trivial(lat);
    const auto g = TransferSystem::complete(lat);
    for (const auto& o : systems_of(lat)) {
      CHECK(is_compatible(g, o).compatible);
      CHECK(is_compatible(o, t).compatible);
    }
  }
}

TEST_CASE("witnesses reconstruct a concrete failure") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    for (const auto& a : systems_of(lat))
      for (const auto& m : systems_of(lat)) {
        auto r = is_compatible(a, m);
        if (r.compatible) continue;
        REQUIRE(r.witness.has_value());
        const auto& w = *r.witness;
        CHECK(m.has(w.k, w.h));
        CHECK(is_admissible_set(a, w.t).admissible);
        CHECK(static_cast<int>(w.t_orbits.size()) <= lat->index(w.k, w.h));
        auto q = is_admissible_set(a, coinduce(w.h, w.t));
        CHECK_FALSE(q.admissible);
        CHECK_FALSE(a.has(w.offending.stabilizer_class, w.h));
      }
  }
}

TEST_CASE("brute force oracle agrees on small groups") {
  // Groups with at most four conjugacy classes of subgroups.
  for (const char* name : {"C2", "C3", "C4", "C9", "C6", "S3", "C8"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    CHECK(lat->class_count() <= 4);
    BruteForceOracle oracle;
    const int budget = lat->group().order();
    for (const auto& a : systems_of(lat))
      for (const auto& m : systems_of(lat)) CHECK(oracle.compatible(a, m, budget) == is_compatible(a, m).compatible);
  }
  auto c2 = make_lattice(builtin_group("C2"));
  CHECK(brute_force_compatible(TransferSystem::complete(c2), TransferSystem::complete(c2), 2));
  CHECK_FALSE(brute_force_compatible(TransferSystem::trivial(c2), TransferSystem::complete(c2), 2));
  CHECK_THROWS_AS(brute_force_compatible(TransferSystem::trivial(c2), TransferSystem::complete(c2), 1), InputError);
}

TEST_CASE("subconjugacy filter") {
  auto c4 = make_lattice(builtin_group("C4"));
  for (const auto& o : systems_of(c4)) CHECK(subconjugacy_filter(o, TransferSystem::trivial(c4)));
  const auto om = TransferSystem::from_edges(c4, {{0, 2}});
  CHECK_FALSE(subconjugacy_filter(om, om));
  for (const char* name : {"C4", "C6", "C8", "S3"}) {
    auto lat = make_lattice(builtin_group(name));
    for (const auto& a : systems_of(lat))
      for (const auto& m : systems_of(lat))
        if (is_compatible(a, m).compatible) {
          CHECK(subconjugacy_filter(a, m));
          CHECK(leq(m, a));
        }
  }
}

TEST_CASE("compatibility is monotone in the multiplicative system and stable under meets") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    auto all = systems_of(lat);
    for (const auto& a : all)
      for (const auto& m : all) {
        if (!is_compatible(a, m).compatible) continue;
        for (const auto& m2 : all)
          if (leq(m2, m)) CHECK(is_compatible(a, m2).compatible);
        for (const auto& a2 : all)
          for (const auto& m2 : all)
            if (is_compatible(a2, m2).compatible) CHECK(is_compatible(meet(a, a2), meet(m, m2)).compatible);
      }
  }
}

TEST_CASE("additive hull is the least compatible enlargement") {
  auto c2 = make_lattice(builtin_group("C2"));
  CHECK(additive_hull(TransferSystem::trivial(c2), TransferSystem::complete(c2)) == TransferSystem::complete(c2));
  for (const char* name : {"C4", "C6"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    auto all = systems_of(lat);
    for (const auto& a : all) {
      CHECK(additive_hull(a, TransferSystem::trivial(lat)) == a);
      for (const auto& m : all) {
        const auto hull = additive_hull(a, m);
        CHECK(leq(a, hull));
        CHECK(is_compatible(hull, m).compatible);
        CHECK(additive_hull(hull, m) == hull);
        for (const auto& other : all)
          if (leq(a, other) && is_compatible(other, m).compatible) CHECK(leq(hull, other));
      }
    }
  }
}

TEST_CASE("multiplicative hull is the greatest compatible system") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    auto all = systems_of(lat);
    CHECK(multiplicative_hull(TransferSystem::complete(lat)) == TransferSystem::complete(lat));
    CHECK(multiplicative_hull(TransferSystem::trivial(lat)) == TransferSystem::trivial(lat));
    for (const auto& a : all) {
      const auto hull = multiplicative_hull(a);
      CHECK(is_compatible(a, hull).compatible);
      for (const auto& m : all)
        if (is_compatible(a, m).compatible) CHECK(leq(m, hull));
    }
  }
}

TEST_CASE("census counts") {
  auto c2 = census(make_lattice(builtin_group("C2")));
  CHECK(c2.total_pairs == 4);
  CHECK(c2.compatible_pairs == 3);
  auto c3 = census(make_lattice(builtin_group("C3")));
  CHECK(c3.compatible_pairs == 3);

  auto c4 = census(make_lattice(builtin_group("C4")));
  CHECK(c4.n_systems == 5);
  CHECK(c4.comparable_pairs == 13);
  CHECK(c4.compatible_pairs == 12);
  REQUIRE(c4.comparable_incompatible.size() == 1);
  const auto [ia, im] = c4.comparable_incompatible.front();
  CHECK(ia == im);
  CHECK(c4.systems[ia] == TransferSystem::from_edges(c4.systems[ia].lattice(), {{0, 2}}));

  auto c6 = census(make_lattice(builtin_group("C6")));
  CHECK(c6.comparable_pairs == 44);
  CHECK(c6.filter_pass == 39);
  CHECK(c6.compatible_pairs == 37);

  auto c8 = census(make_lattice(builtin_group("C8")));
  CHECK(c8.filter_pass == 55);
  CHECK(c8.compatible_pairs == 55);
  for (const auto* c : {&c2, &c3, &c4, &c6, &c8}) {
    CHECK(c->anomalies.empty());
    CHECK(c->compatible_pairs <= c->filter_pass);
    CHECK(c->filter_pass <= c->comparable_pairs);
    CHECK(c->comparable_pairs <= c->total_pairs);
  }
}

TEST_CASE("comparable pairs on cyclic p-groups count Tamari intervals") {
  // Transfer systems on C_{p^n} form the Tamari lattice on n+1 points; its
  // interval count is 2(4m+1)! / ((m+1)! (3m+2)!) with m = n+1.
  auto intervals = [](long long m) {
    long double v = 2;
    for (long long i = 3 * m + 3; i <= 4 * m + 1; ++i) v *= i;
    for (long long i = 2; i <= m + 1; ++i) v /= i;
    return static_cast<long long>(v + 0.5L);
  };
  CHECK(intervals(2) == 3);
  CHECK(intervals(3) == 13);
  CHECK(intervals(4) == 68);
  CHECK(census(make_lattice(builtin_group("C2"))).comparable_pairs == intervals(2));
  CHECK(census(make_lattice(builtin_group("C9"))).comparable_pairs == intervals(3));
  CHECK(census(make_lattice(builtin_group("C8"))).comparable_pairs == intervals(4));
}

TEST_CASE("coinduction probe") {
  auto c2 = make_lattice(builtin_group("C2"));
  auto probe = check_coinduction_preserves(TransferSystem::complete(c2), TransferSystem::complete(c2));
  CHECK(probe.preserves);
  CHECK(probe.maps_checked > 0);
  CHECK_THROWS_AS(check_coinduction_preserves(TransferSystem::trivial(c2), TransferSystem::complete(c2)), InputError);

  auto c4 = make_lattice(builtin_group("C4"));
  for (const auto& a : systems_of(c4)) {
    auto p = check_coinduction_preserves(a, TransferSystem::trivial(c4));
    CHECK(p.preserves);
    CHECK(p.maps_checked == 0);
    for (const auto& m : systems_of(c4))
      if (is_compatible(a, m).compatible) CHECK(check_coinduction_preserves(a, m).preserves);
  }
}
