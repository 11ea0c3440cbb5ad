#include "doctest.h"

#include <set>

#include "bipoly/transfer.hpp"

using namespace bipoly;

namespace {

// Closedness written out directly on the relation, independent of the library.
bool is_closed(const Lattice& lat, const std::set<std::pair<int, int>>& e) {
  const int n = lat.count();
  auto has = [&](int k, int h) { return k == h || e.count({k, h}) > 0; };
  for (auto [k, h] : e) {
    for (int g = 0; g < lat.group().order(); ++g)
      if (!has(lat.conjugate(g, k), lat.conjugate(g, h))) return false;
    for (int l = 0; l < n; ++l)
      if (lat.leq(l, h) && !has(lat.intersect(k, l), l)) return false;
    for (int j = 0; j < n; ++j)
      if (has(j, k) && !has(j, h)) return false;
  }
  return true;
}

std::set<std::vector<char>> brute_force_systems(const LatticePtr& lat) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < lat->count(); ++k)
    for (int h = 0; h < lat->count(); ++h)
      if (k != h && lat->leq(k, h)) pairs.emplace_back(k, h);
  std::set<std::vector<char>> out;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    std::set<std::pair<int, int>> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.insert(pairs[i]);
    if (!is_closed(*lat, e)) continue;
    out.insert(TransferSystem::from_closed_edges(lat, {e.begin(), e.end()}).encoding());
  }
  return out;
}

}  // namespace

TEST_CASE("closure from seeds") {
  auto c4 = make_lattice(builtin_group("C4"));
  auto tr = TransferSystem::from_edges(c4, {});
  CHECK(tr == TransferSystem::trivial(c4));
  CHECK(tr.edge_count() == 0);

  auto gen = TransferSystem::complete(c4);
  CHECK(gen.edge_count() == 3);

  // Restriction of e -> C_4 to C_2 forces e -> C_2, and nothing forces C_2 -> C_4.
  auto t = TransferSystem::from_edges(c4, {{0, 2}});
  CHECK(t.nontrivial_edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

  CHECK_THROWS_AS(TransferSystem::from_edges(c4, {{2, 1}}), InputError);
  CHECK_THROWS_WITH_AS(TransferSystem::from_closed_edges(c4, {{0, 2}}), doctest::Contains("restriction"),
                       InputError);
}

TEST_CASE("transfer system counts") {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"C2", 2}, {"C3", 2}, {"C4", 5}, {"C9", 5}, {"C8", 14}, {"C6", 10}, {"trivial", 1}};
  for (auto [name, count] : expected) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    CHECK(enumerate_transfer_systems(lat).size() == count);
  }
}

TEST_CASE("enumeration agrees with brute force over edge subsets") {
  for (const char* name : {"C2", "C4", "C6", "C8", "C9", "C2xC2", "C10"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    if (lat->count() > 5) continue;
    std::set<std::vector<char>> listed;
    for (const auto& t : enumerate_transfer_systems(lat)) listed.insert(t.encoding());
    CHECK(listed == brute_force_systems(lat));
  }
}

TEST_CASE("enumerated systems are closed and bounded by trivial and complete") {
  for (const char* name : {"C4", "C6", "C8", "S3", "Q8", "D4"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    auto systems = enumerate_transfer_systems(lat);
    const auto tr = TransferSystem::trivial(lat);
    const auto gen = TransferSystem::complete(lat);
    for (const auto& t : systems) {
      CHECK_FALSE(closure_violation(*lat, t.encoding()).has_value());
      CHECK(leq(tr, t));
      CHECK(leq(t, gen));
    }
    CHECK(std::is_sorted(systems.begin(), systems.end(),
                         [](const auto& a, const auto& b) { return a.encoding() < b.encoding(); }));
  }
}

TEST_CASE("meet and join are lattice operations") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    auto systems = enumerate_transfer_systems(lat);
    const auto tr = TransferSystem::trivial(lat);
    const auto gen = TransferSystem::complete(lat);
    for (const auto& a : systems) {
      CHECK(meet(a, gen) == a);
      CHECK(join(a, tr) == a);
      for (const auto& b : systems) {
        const auto j = join(a, b);
        const auto m = meet(a, b);
        CHECK(leq(a, j));
        CHECK(leq(b, j));
        CHECK(leq(m, a));
        CHECK(leq(m, b));
        for (const auto& c : systems) {
          if (leq(a, c) && leq(b, c)) CHECK(leq(j, c));
          if (leq(c, a) && leq(c, b)) CHECK(leq(c, m));
        }
      }
    }
  }
  auto c4 = make_lattice(builtin_group("C4"));
  auto c6 = make_lattice(builtin_group("C6"));
  CHECK_THROWS_AS(join(TransferSystem::trivial(c4), TransferSystem::trivial(c6)), InputError);
}

TEST_CASE("admissible sets") {
  auto c4 = make_lattice(builtin_group("C4"));
  const auto tr = TransferSystem::trivial(c4);
  const auto gen = TransferSystem::complete(c4);
  for (const auto& o : enumerate_transfer_systems(c4))
    for (int h = 0; h < c4->count(); ++h) CHECK(is_admissible_set(o, GSet::trivial(c4, h, 3)).admissible);

  auto q = is_admissible_set(tr, coset_space(c4, 2, 0));
  CHECK_FALSE(q.admissible);
  REQUIRE(q.offending_orbit.has_value());
  CHECK(q.offending_orbit->stabilizer_class == 0);
  CHECK(q.offending_orbit->multiplicity == 1);

  CHECK(is_admissible_set(gen, gset_from_orbit_types(c4, 2, {0, 1, 1, 2})).admissible);
}

TEST_CASE("maps in the indexing category") {
  auto c4 = make_lattice(builtin_group("C4"));
  const auto x = gset_from_orbit_types(c4, 2, {0, 1, 2});
  for (const auto& o : enumerate_transfer_systems(c4)) {
    CHECK(map_in_indexing_category(o, identity_map(x)));
    CHECK(map_in_indexing_category(o, fold_map(x)));
    // Fiber-by-fiber evaluation agrees.
    const auto q = orbit_quotient(c4, 2, 0, 1);
    bool by_fibers = true;
    for (const auto& fib : map_fiber_data(q)) by_fibers &= is_admissible_set(o, fib.fiber).admissible;
    CHECK(map_in_indexing_category(o, q) == by_fibers);
  }
  CHECK_FALSE(map_in_indexing_category(TransferSystem::trivial(c4), orbit_quotient(c4, 2, 0, 2)));
  CHECK(map_in_indexing_category(TransferSystem::complete(c4), orbit_quotient(c4, 2, 0, 2)));
}
