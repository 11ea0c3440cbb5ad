#include "doctest.h"

#include "bipoly/sampling.hpp"

using namespace bipoly;

namespace {

struct Fixture {
  LatticePtr lat;
  int top;
  GSet orbit(int k) const { return coset_space(lat, top, k); }
};

Fixture make(const char* name) {
  auto lat = make_lattice(builtin_group(name));
  return {lat, lat->top()};
}

SubgraphSpec complete_spec(const LatticePtr& lat) {
  return SubgraphSpec::unchecked(TransferSystem::complete(lat), TransferSystem::complete(lat));
}

}  // namespace

TEST_CASE("generators of identities are identities") {
  auto c4 = make("C4");
  const GSet s = gset_from_orbit_types(c4.lat, c4.top, {0, 1, 2});
  const auto id = identity_map(s);
  CHECK(bispan_eq(gen_R(id), identity(s)));
  CHECK(bispan_eq(gen_N(id), identity(s)));
  CHECK(bispan_eq(gen_T(id), identity(s)));
  CHECK_THROWS_AS(Bispan(id, identity_map(c4.orbit(0)), identity_map(c4.orbit(0))), InputError);
}

TEST_CASE("transfer along the fold is addition") {
  auto c2 = make("C2");
  Sampler rng(7);
  const GSet s = gset_from_orbit_types(c2.lat, c2.top, {0, 1});
  const GSet t = gset_from_orbit_types(c2.lat, c2.top, {0});
  for (int i = 0; i < 20; ++i) {
    auto p = rng.bispan_in(complete_spec(c2.lat), s, t, 2);
    auto q = rng.bispan_in(complete_spec(c2.lat), s, t, 2);
    CHECK(bispan_eq(compose(gen_T(fold_map(t)), pairing(p, q)), add(p, q)));
  }
}

TEST_CASE("norm of a sum on C_2") {
  auto c2 = make("C2");
  const GSet free = c2.orbit(0);
  const auto norm = gen_N(orbit_quotient(c2.lat, c2.top, 0, 1));
  const auto sum = gen_T(fold_map(free));
  const auto composite = compose(norm, sum);
  // n(a+b) = n(a) + n(b) + tr(a b̄): two fixed points and one free orbit.
  CHECK(fingerprint(composite.u2()) == Fingerprint{{0, 1}, {1, 2}});
  CHECK(composite.u2().size() == 4);
  CHECK(composite.u1().size() == 8);  // free orbit x Π over the point

  // Not in the trivial multiplicative subgraph.
  auto tr = TransferSystem::trivial(c2.lat);
  auto gen = TransferSystem::complete(c2.lat);
  CHECK_FALSE(in_subgraph(norm, SubgraphSpec::unchecked(gen, tr)));
  CHECK(in_subgraph(norm, SubgraphSpec::checked(gen, gen)));
  CHECK_THROWS_AS(SubgraphSpec::checked(tr, gen), InputError);
}

TEST_CASE("restriction commutes past transfer along a pullback square") {
  auto c4 = make("C4");
  Sampler rng(11);
  for (int i = 0; i < 30; ++i) {
    const GSet y = rng.gset(c4.lat, c4.top, 2, true);
    const GMap f = rng.map_in(TransferSystem::complete(c4.lat), y, 2);
    const GMap g = rng.map_in(TransferSystem::complete(c4.lat), y, 2);
    // R_f ∘ T_g = T_{g'} ∘ R_{f'} with g', f' the pullback projections.
    Pullback pb = pullback(g, f);
    CHECK(bispan_eq(compose(gen_R(f), gen_T(g)), compose(gen_T(pb.second), gen_R(pb.first))));
  }
}

TEST_CASE("category laws") {
  for (const char* name : {"C4", "S3"}) {
    CAPTURE(name);
    auto fx = make(name);
    Sampler rng(123);
    auto spec = complete_spec(fx.lat);
    for (int i = 0; i < 25; ++i) {
      const GSet a = rng.gset(fx.lat, fx.top, 1, true);
      const GSet b = rng.gset(fx.lat, fx.top, 1, true);
      const GSet c = rng.gset(fx.lat, fx.top, 1, true);
      const GSet d = rng.gset(fx.lat, fx.top, 1, true);
      auto p = rng.bispan_in(spec, a, b, 2);
      auto q = rng.bispan_in(spec, b, c, 2);
      auto r = rng.bispan_in(spec, c, d, 2);
      CHECK(bispan_eq(compose(identity(b), p), p));
      CHECK(bispan_eq(compose(p, identity(a)), p));
      CHECK(bispan_eq(compose(r, compose(q, p)), compose(compose(r, q), p)));
    }
  }
}

TEST_CASE("composition with an isomorphic endpoint") {
  auto c4 = make("C4");
  const GSet x = gset_from_orbit_types(c4.lat, c4.top, {1, 2});
  const GSet y = gset_from_orbit_types(c4.lat, c4.top, {2, 1});
  CHECK_FALSE(x.same_as(y));
  auto iso = iso_test(x, y);
  REQUIRE(iso.has_value());
  CHECK(bispan_eq(compose(identity(y), identity(x)), gen_T(*iso)));
  CHECK_THROWS_AS(compose(identity(c4.orbit(0)), identity(x)), InputError);
}

TEST_CASE("semiring laws") {
  for (const char* name : {"C2", "C4", "S3"}) {
    CAPTURE(name);
    auto fx = make(name);
    Sampler rng(99);
    auto spec = complete_spec(fx.lat);
    for (int i = 0; i < 20; ++i) {
      const GSet s = rng.gset(fx.lat, fx.top, 1, true);
      const GSet t = rng.gset(fx.lat, fx.top, 2, true);
      auto p = rng.bispan_in(spec, s, t, 2);
      auto q = rng.bispan_in(spec, s, t, 2);
      auto r = rng.bispan_in(spec, s, t, 1);
      CHECK(bispan_eq(add(p, zero(s, t)), p));
      CHECK(bispan_eq(add(p, q), add(q, p)));
      CHECK(bispan_eq(add(add(p, q), r), add(p, add(q, r))));
      CHECK(bispan_eq(mul(p, one(s, t)), p));
      CHECK(bispan_eq(mul(p, zero(s, t)), zero(s, t)));
      CHECK(bispan_eq(mul(p, q), mul(q, p)));
      CHECK(bispan_eq(mul(mul(p, q), r), mul(p, mul(q, r))));
      CHECK(bispan_eq(mul(p, add(q, r)), add(mul(p, q), mul(p, r))));
      // The product formula is the norm along the fold applied to the pairing.
      CHECK(bispan_eq(mul(p, q), compose(gen_N(fold_map(t)), pairing(p, q))));
    }
  }
}

TEST_CASE("transfers are additive and norms multiplicative") {
  auto c4 = make("C4");
  Sampler rng(5);
  auto spec = complete_spec(c4.lat);
  for (int i = 0; i < 20; ++i) {
    const GSet s = rng.gset(c4.lat, c4.top, 1, true);
    const GSet t = rng.gset(c4.lat, c4.top, 1, true);
    auto p = rng.bispan_in(spec, s, t, 2);
    auto q = rng.bispan_in(spec, s, t, 2);
    const GSet u = rng.gset(c4.lat, c4.top, 1, true);
    auto h = rng.map_to(t, u);
    REQUIRE(h.has_value());
    CHECK(bispan_eq(compose(gen_T(*h), add(p, q)), add(compose(gen_T(*h), p), compose(gen_T(*h), q))));
    CHECK(bispan_eq(compose(gen_N(*h), mul(p, q)), mul(compose(gen_N(*h), p), compose(gen_N(*h), q))));
    // Precomposing with a restriction is a semiring map.
    const GSet s2 = rng.gset(c4.lat, c4.top, 2, true);
    auto k = rng.map_to(s, s2);
    REQUIRE(k.has_value());
    const Bispan rk = gen_R(*k);
    CHECK(bispan_eq(compose(add(p, q), rk), add(compose(p, rk), compose(q, rk))));
    CHECK(bispan_eq(compose(mul(p, q), rk), mul(compose(p, rk), compose(q, rk))));
  }
}

TEST_CASE("coproducts are products") {
  auto c4 = make("C4");
  Sampler rng(17);
  for (int i = 0; i < 20; ++i) {
    const GSet x = rng.gset(c4.lat, c4.top, 1, true);
    const GSet s = rng.gset(c4.lat, c4.top, 2, true);
    const GSet t = rng.gset(c4.lat, c4.top, 2, true);
    auto p = rng.bispan_in(complete_spec(c4.lat), x, s, 2);
    auto q = rng.bispan_in(complete_spec(c4.lat), x, t, 2);
    auto pr = projections(s, t);
    auto pq = pairing(p, q);
    CHECK(bispan_eq(compose(pr.to_s, pq), p));
    CHECK(bispan_eq(compose(pr.to_t, pq), q));
    // R is product preserving: the pairing of the projections is the identity.
    CHECK(bispan_eq(pairing(pr.to_s, pr.to_t), identity(coproduct(s, t).set)));
    // Pairing with zero is P followed by the left injection.
    auto pz = pairing(p, zero(x, t));
    CHECK(bispan_eq(compose(pr.to_s, pz), p));
    CHECK(bispan_eq(compose(pr.to_t, pz), zero(x, t)));
    CHECK(bispan_eq(pz, compose(gen_T(coproduct(s, t).left), p)));
    for (const auto& o : enumerate_transfer_systems(c4.lat)) {
      CHECK(in_subgraph(pr.to_s, SubgraphSpec::unchecked(o, TransferSystem::trivial(c4.lat))));
      CHECK(in_subgraph(pr.to_t, SubgraphSpec::unchecked(TransferSystem::trivial(c4.lat), o)));
    }
  }
}

TEST_CASE("identities and isomorphisms lie in every subgraph") {
  auto c4 = make("C4");
  const GSet x = gset_from_orbit_types(c4.lat, c4.top, {0, 1, 2});
  const GSet y = gset_from_orbit_types(c4.lat, c4.top, {2, 0, 1});
  auto iso = iso_test(x, y);
  REQUIRE(iso.has_value());
  for (const auto& a : enumerate_transfer_systems(c4.lat))
    for (const auto& m : enumerate_transfer_systems(c4.lat)) {
      auto spec = SubgraphSpec::unchecked(a, m);
      CHECK(in_subgraph(identity(x), spec));
      CHECK(in_subgraph(gen_T(*iso), spec));
      CHECK(in_subgraph(gen_N(*iso), spec));
      CHECK(in_subgraph(Bispan(*iso, identity_map(x), *iso), spec));
    }
}

TEST_CASE("compatible pairs give subcategories") {
  auto c4 = make("C4");
  auto all = enumerate_transfer_systems(c4.lat);
  Sampler rng(2024);
  for (const auto& a : all)
    for (const auto& m : all) {
      if (!is_compatible(a, m).compatible) continue;
      auto spec = SubgraphSpec::checked(a, m);
      for (int i = 0; i < 15; ++i) {
        const GSet s = rng.gset(c4.lat, c4.top, 1, true);
        const GSet t = rng.gset(c4.lat, c4.top, 2, true);
        const GSet w = rng.gset(c4.lat, c4.top, 2, true);
        auto p = rng.bispan_in(spec, s, t, 2);
        auto q = rng.bispan_in(spec, t, w, 2);
        REQUIRE(in_subgraph(p, spec));
        REQUIRE(in_subgraph(q, spec));
        CHECK(in_subgraph(compose(q, p), spec));
      }
    }
}

TEST_CASE("incompatibility witnesses escape the subgraph") {
  for (const char* name : {"C2", "C4", "C6"}) {
    CAPTURE(name);
    auto fx = make(name);
    auto all = enumerate_transfer_systems(fx.lat);
    for (const auto& a : all)
      for (const auto& m : all) {
        auto r = is_compatible(a, m);
        if (r.compatible || !leq(m, a)) continue;
        auto spec = SubgraphSpec::unchecked(a, m);
        auto esc = escape_pair(*r.witness);
        CHECK(in_subgraph(esc.transfer, spec));
        CHECK(in_subgraph(esc.norm, spec));
        CHECK_FALSE(in_subgraph(compose(esc.norm, esc.transfer), spec));
      }
  }
}

TEST_CASE("bispan equality separates distinct classes") {
  auto c4 = make("C4");
  const auto q = orbit_quotient(c4.lat, c4.top, 0, 2);
  CHECK_FALSE(bispan_eq(gen_N(q), gen_T(q)));
  CHECK_FALSE(bispan_eq(add(gen_T(q), gen_T(q)), gen_T(q)));
  // Same middle sets and legs up to orbit types, different composite maps.
  const GSet x = gset_from_orbit_types(c4.lat, c4.top, {0, 0});
  const GSet y = gset_from_orbit_types(c4.lat, c4.top, {0});
  const GSet s = coset_space(c4.lat, c4.top, 0);
  const std::vector<int> id_pts = {0, 1, 2, 3, 0, 1, 2, 3};
  const std::vector<int> twist = {0, 1, 2, 3, 1, 2, 3, 0};
  const GMap to_s(x, s, id_pts);
  const Bispan a(to_s, GMap(x, y, id_pts), to_point(y));
  const Bispan b(to_s, GMap(x, y, twist), to_point(y));
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK_FALSE(bispan_eq(a, b));
  CHECK(bispan_eq(a, a));
}
