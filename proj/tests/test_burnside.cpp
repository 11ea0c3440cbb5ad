#include "doctest.h"

#include "bipoly/burnside.hpp"

using namespace bipoly;

TEST_CASE("level bases") {
  auto c2 = make_lattice(builtin_group("C2"));
  CHECK(level(TransferSystem::complete(c2), 1).rank() == 2);
  for (const char* name : {"C4", "S3", "Q8"}) {
    auto lat = make_lattice(builtin_group(name));
    for (int h = 0; h < lat->count(); ++h) {
      CHECK(level(TransferSystem::trivial(lat), h).rank() == 1);
      CHECK(level(TransferSystem::trivial(lat), h).basis == std::vector<int>{h});
    }
  }
  auto c4 = make_lattice(builtin_group("C4"));
  const auto lvl = level(TransferSystem::from_edges(c4, {{1, 2}}), 2);
  CHECK(lvl.basis == std::vector<int>{1, 2});
}

TEST_CASE("multiplication by orbit decomposition") {
  auto c2 = make_lattice(builtin_group("C2"));
  const auto l2 = level(TransferSystem::complete(c2), 1);
  const auto free2 = basis_vector(l2, 0);
  CHECK(multiply(l2, free2, free2) == IntVector{2, 0});

  auto c4 = make_lattice(builtin_group("C4"));
  const auto l4 = level(TransferSystem::complete(c4), 2);
  const auto half = basis_vector(l4, 1);
  CHECK(multiply(l4, half, half) == IntVector{0, 2, 0});
  // Independent count: |H/K × H/L| points split into orbits of size [H : K ∩ L] for abelian H.
  for (int a : l4.basis)
    for (int b : l4.basis) {
      const int meet = c4->intersect(a, b);
      const long long copies = static_cast<long long>(c4->index(a, 2)) * c4->index(b, 2) / c4->index(meet, 2);
      CHECK(multiply(l4, basis_vector(l4, a), basis_vector(l4, b)) == [&] {
        IntVector v(3, 0);
        v[l4.position(meet)] = copies;
        return v;
      }());
    }
  CHECK_THROWS_AS(multiply(l4, IntVector{1, 0}, half), InputError);
}

TEST_CASE("ring axioms at every level") {
  for (const char* name : {"C4", "C6", "S3"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    for (const auto& o : enumerate_transfer_systems(lat))
      for (int h = 0; h < lat->count(); ++h) {
        const auto lvl = level(o, h);
        const auto unit = basis_vector(lvl, h);
        std::vector<IntVector> samples;
        for (int i = 0; i < lvl.rank(); ++i) samples.push_back(basis_vector(lvl, lvl.basis[i]));
        IntVector mixed(lvl.rank());
        for (int i = 0; i < lvl.rank(); ++i) mixed[i] = 2 * i - 1;
        samples.push_back(mixed);
        for (const auto& a : samples) {
          CHECK(multiply(lvl, unit, a) == a);
          for (const auto& b : samples) {
            CHECK(multiply(lvl, a, b) == multiply(lvl, b, a));
            for (const auto& c : samples)
              CHECK(multiply(lvl, multiply(lvl, a, b), c) == multiply(lvl, a, multiply(lvl, b, c)));
          }
        }
      }
  }
}

TEST_CASE("restriction and transfer matrices") {
  auto c2 = make_lattice(builtin_group("C2"));
  const auto gen = TransferSystem::complete(c2);
  CHECK(restriction(gen, 0, 1) == IntMatrix{{2, 1}});
  CHECK(restriction(gen, 1, 1) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(transfer(gen, 0, 1) == IntMatrix{{1}, {0}});
  CHECK_THROWS_WITH_AS(transfer(TransferSystem::trivial(c2), 0, 1), doctest::Contains("edge not in O"), InputError);

  auto s3 = make_lattice(builtin_group("S3"));
  for (const auto& o : enumerate_transfer_systems(s3))
    for (int h = 0; h < s3->count(); ++h) {
      const auto r = restriction(o, h, h);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) CHECK(r[i][j] == (i == j));
    }
}

TEST_CASE("Frobenius and double coset formulas") {
  for (const char* name : {"C4", "C6", "S3", "Q8", "C2xC2"}) {
    CAPTURE(name);
    auto lat = make_lattice(builtin_group(name));
    for (const auto& o : enumerate_transfer_systems(lat))
      for (int h = 0; h < lat->count(); ++h)
        for (int k : lat->subgroups_of(h)) {
          if (!o.has(k, h)) continue;
          CHECK(frobenius_holds(o, k, h));
          for (int l : lat->subgroups_of(h)) CHECK(double_coset_holds(o, k, h, l));
        }
  }
}
