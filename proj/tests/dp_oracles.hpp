#pragma once

// Closed-form descriptions of dependent products, checked against the section
// enumeration in the library. Shared by the unit tests and the acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "bipoly/bispan.hpp"

namespace bipoly::oracle {

/// Every G-set with at most `max_orbits` orbits and at most `max_points` points,
/// one per multiset of orbit types.
inline std::vector<GSet> small_gsets(const LatticePtr& lat, int max_orbits, int max_points) {
  std::vector<int> types;
  for (int c = 0; c < lat->class_count(); ++c) types.push_back(lat->class_rep(c));
  std::vector<GSet> out;
  std::vector<int> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int points) {
    out.push_back(gset_from_orbit_types(lat, lat->top(), pick));
    if (static_cast<int>(pick.size()) == max_orbits) return;
    for (std::size_t i = from; i < types.size(); ++i) {
      const int n = lat->index(types[i], lat->top());
      if (points + n > max_points) continue;
      pick.push_back(types[i]);
      rec(i, points + n);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Every equivariant map x -> y.
inline std::vector<GMap> all_maps(const GSet& x, const GSet& y) {
  const auto& lat = *x.lattice();
  const auto& acting = lat.subgroup(x.acting()).elements;
  std::vector<std::vector<int>> choices(x.orbit_count());
  for (int o = 0; o < x.orbit_count(); ++o)
    for (int q = 0; q < y.size(); ++q)
      if (lat.leq(x.orbit_stabilizer(o), y.stabilizer(q))) choices[o].push_back(q);
  std::vector<GMap> out;
  std::vector<int> pts(x.size(), -1);
  std::function<void(int)> rec = [&](int o) {
    if (o == x.orbit_count()) {
      out.push_back(GMap::unchecked(x, y, pts));
      return;
    }
    for (int q : choices[o]) {
      const int r = x.orbit_rep(o);
      for (int e : acting) pts[x.act(e, r)] = y.act(e, q);
      rec(o + 1);
    }
  };
  rec(0);
  return out;
}

/// Isomorphism of objects over a common base.
inline bool iso_over(const GMap& a, const GMap& b) {
  if (!a.target().same_as(b.target())) return false;
  return bispan_eq(Bispan(to_point(a.source()), identity_map(a.source()), a),
                   Bispan(to_point(b.source()), identity_map(b.source()), b));
}

struct Tally {
  long long instances = 0;
  long long mismatches = 0;
  std::vector<std::string> notes;
  void record(bool ok, const std::string& what) {
    ++instances;
    if (!ok) {
      ++mismatches;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

/// Empty source: Π along ∅ -> T is T itself; an empty A kills exactly the
/// points with nonempty fiber.
inline void empty_map_case(const LatticePtr& lat, Tally& t) {
  for (const auto& target : small_gsets(lat, 2, 12)) {
    const GMap g = from_empty(target);
    t.record(iso_over(dependent_product(g, identity_map(g.source())), identity_map(target)), "empty source");
    for (const auto& s : small_gsets(lat, 2, 12))
      for (const auto& gm : all_maps(s, target)) {
        std::vector<int> empty_fiber;
        std::vector<char> hit(target.size(), 0);
        for (int v : gm.points()) hit[v] = 1;
        for (int q = 0; q < target.size(); ++q)
          if (!hit[q]) empty_fiber.push_back(q);
        const GSet kept = subset(target, empty_fiber, target.acting());
        const GMap incl(kept, target, empty_fiber);
        t.record(iso_over(dependent_product(gm, from_empty(s)), incl), "empty A");
      }
  }
}

/// All pairs (g : S -> T, h : A -> S) with T one orbit and S, A at most two orbits.
struct Instance {
  GMap g;
  GMap h;
};

inline std::vector<Instance> instances(const LatticePtr& lat, int max_points) {
  std::vector<Instance> out;
  const auto sets = small_gsets(lat, 2, max_points);
  for (const auto& t : small_gsets(lat, 1, max_points)) {
    if (t.orbit_count() != 1) continue;
    for (const auto& s : sets)
      for (const auto& g : all_maps(s, t))
        for (const auto& a : sets)
          for (const auto& h : all_maps(a, s)) out.push_back({g, h});
  }
  return out;
}

/// Π_{f ⨿ g}(h_T ⨿ h_U) ≅ Π_f(h_T) ⨿ Π_g(h_U) over T1 ⨿ T2.
inline void disjoint_union_case(const std::vector<Instance>& inst, Tally& t, std::size_t stride) {
  for (std::size_t i = 0; i < inst.size(); i += stride)
    for (std::size_t j = i % stride; j < inst.size(); j += stride) {
      const auto& x = inst[i];
      const auto& y = inst[j];
      const GMap lhs = dependent_product(coproduct_map(x.g, y.g), coproduct_map(x.h, y.h));
      const GMap rhs = coproduct_map(dependent_product(x.g, x.h), dependent_product(y.g, y.h));
      t.record(iso_over(lhs, rhs), "disjoint union");
    }
}

/// Π_∇(h) ≅ ι_L*(h) ×_T ι_R*(h) for the fold ∇ : T ⨿ T -> T.
inline void fold_case(const LatticePtr& lat, Tally& t) {
  for (const auto& target : small_gsets(lat, 1, 6)) {
    const Coproduct two = coproduct(target, target);
    const GMap fold = fold_map(target);
    for (const auto& a : small_gsets(lat, 2, 12))
      for (const auto& h : all_maps(a, two.set)) {
        Pullback left = pullback(two.left, h);
        Pullback right = pullback(two.right, h);
        Pullback both = pullback(left.first, right.first);
        const GMap expected = compose(left.first, both.first);
        t.record(iso_over(dependent_product(fold, h), expected), "fold");
      }
  }
}

/// Along q : G/K -> G/H, Π_q(A) ≅ G ×_H Map^K(H, T_e) with T_e the fiber over eK.
inline void orbit_case(const LatticePtr& lat, Tally& t) {
  const int top = lat->top();
  for (int h = 0; h < lat->count(); ++h)
    for (int k : lat->subgroups_of(h)) {
      if (lat->rep_under(top, h) != h) continue;
      const GMap q = orbit_quotient(lat, top, k, h);
      for (const auto& a : small_gsets(lat, 2, 12))
        for (const auto& hm : all_maps(a, q.source())) {
          std::vector<int> over_e;
          for (int p = 0; p < a.size(); ++p)
            if (hm(p) == 0) over_e.push_back(p);
          const GSet t_e = subset(a, over_e, k);
          const GSet coind = coinduce(h, t_e);
          const GMap pi = dependent_product(q, hm);
          const auto fibers = map_fiber_data(pi);
          const bool ok = fibers.size() == 1 && fibers[0].target_point == 0 && isomorphic(fibers[0].fiber, coind) &&
                          isomorphic(pi.source(), induce(top, coind));
          t.record(ok, "orbit formula");
        }
    }
}

}  // namespace bipoly::oracle
