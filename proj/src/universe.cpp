#include "bipoly/universe.hpp"

#include <algorithm>
#include <set>

namespace bipoly {

namespace {

std::string pair_text(const Lattice& lat, int k, int h) { return "(" + lat.label(k) + ", " + lat.label(h) + ")"; }

}  // namespace

std::optional<std::string> datum_violation(const Lattice& lat, const std::vector<std::vector<int>>& d) {
  if (static_cast<int>(d.size()) != lat.count()) return "datum must list every subgroup";
  std::vector<std::set<int>> sets(d.size());
  for (int h = 0; h < lat.count(); ++h)
    for (int k : d[h]) {
      if (k < 0 || k >= lat.count()) return "subgroup index out of range";
      if (!lat.leq(k, h)) return lat.label(k) + " listed for " + lat.label(h) + " is not a subgroup of it";
      sets[h].insert(k);
    }
  for (int h = 0; h < lat.count(); ++h) {
    if (!sets[h].count(h)) return lat.label(h) + " is missing from its own stabilizer set";
    for (int k : sets[h]) {
      for (int a : lat.subgroup(h).elements)
        if (!sets[h].count(lat.conjugate(a, k))) return "stabilizers of " + lat.label(h) + " not closed under conjugation";
      for (int k2 : sets[h])
        if (!sets[h].count(lat.intersect(k, k2))) return "stabilizers of " + lat.label(h) + " not closed under intersection";
      for (int l : lat.subgroups_of(h))
        if (!sets[l].count(lat.intersect(k, l)))
          return "restriction of " + pair_text(lat, k, h) + " to " + lat.label(l) + " is missing";
    }
  }
  return std::nullopt;
}

StabilizerDatum::StabilizerDatum(LatticePtr lattice, std::vector<std::vector<int>> stabilizers)
    : lattice_(std::move(lattice)), d_(std::move(stabilizers)) {
  if (auto v = datum_violation(*lattice_, d_)) throw InputError("stabilizer datum: " + *v);
  for (auto& s : d_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

bool StabilizerDatum::contains(int h, int k) const { return std::binary_search(d_[h].begin(), d_[h].end(), k); }

StabilizerDatum StabilizerDatum::free_or_trivial(LatticePtr lattice) {
  std::vector<std::vector<int>> d(lattice->count());
  for (int h = 0; h < lattice->count(); ++h) d[h] = h == 0 ? std::vector<int>{0} : std::vector<int>{0, h};
  return StabilizerDatum(std::move(lattice), std::move(d));
}

PermUniverse::PermUniverse(LatticePtr lattice, std::vector<int> lambda)
    : lattice_(std::move(lattice)), lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw InputError("universe: Λ is empty");
  std::sort(lambda_.begin(), lambda_.end());
  lambda_.erase(std::unique(lambda_.begin(), lambda_.end()), lambda_.end());
  for (int l : lambda_) {
    if (l < 0 || l >= lattice_->count()) throw InputError("universe: subgroup index out of range");
    for (int c : lattice_->class_members(lattice_->class_of(l)))
      if (!std::binary_search(lambda_.begin(), lambda_.end(), c))
        throw InputError("universe: Λ is not closed under conjugation (" + lattice_->label(l) + ")");
  }
}

PermUniverse PermUniverse::from_classes(LatticePtr lattice, const std::vector<int>& reps) {
  std::vector<int> lambda;
  for (int r : reps) {
    if (r < 0 || r >= lattice->count()) throw InputError("universe: subgroup index out of range");
    const auto& members = lattice->class_members(lattice->class_of(r));
    lambda.insert(lambda.end(), members.begin(), members.end());
  }
  return PermUniverse(std::move(lattice), std::move(lambda));
}

std::vector<PermUniverse> all_perm_universes(const LatticePtr& lattice) {
  const int classes = lattice->class_count();
  if (classes > 20) throw ResourceError("all_perm_universes: too many conjugacy classes");
  std::vector<PermUniverse> out;
  for (long mask = 1; mask < (1L << classes); ++mask) {
    std::vector<int> reps;
    for (int c = 0; c < classes; ++c)
      if (mask >> c & 1) reps.push_back(lattice->class_rep(c));
    out.push_back(PermUniverse::from_classes(lattice, reps));
  }
  return out;
}

TransferSystem little_disks_system(const StabilizerDatum& d) {
  const Lattice& lat = *d.lattice();
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < lat.count(); ++h)
    for (int k : d.at(h)) edges.emplace_back(k, h);
  try {
    return TransferSystem::from_closed_edges(d.lattice(), edges);
  } catch (const InputError& e) {
    throw InputError(std::string("little disks: datum does not give a transfer system: ") + e.what());
  }
}

StabilizerDatum stabilizers_of_perm_universe(const PermUniverse& u, long long subset_cap) {
  const auto& lat = *u.lattice();
  const Group& g = lat.group();
  const int top = lat.top();
  // Setwise G-stabilizers; H-stabilizers are their intersections with H.
  std::set<int> stabs = {top};
  std::set<int> done_classes;
  for (int l : u.lambda()) {
    if (!done_classes.insert(lat.class_of(l)).second) continue;
    const GSet orbit = coset_space(u.lattice(), top, l);
    const int n = orbit.size();
    if (n >= 63 || (1LL << n) > subset_cap) throw ResourceError("universe: orbit too large for subset enumeration");
    for (long long a = 0; a < (1LL << n); ++a) {
      ElementSet fix;
      for (int x = 0; x < g.order(); ++x) {
        long long image = 0;
        for (int p = 0; p < n; ++p)
          if (a >> p & 1) image |= 1LL << orbit.act(x, p);
        if (image == a) fix.set(static_cast<std::size_t>(x));
      }
      stabs.insert(lat.find(fix));
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> now(stabs.begin(), stabs.end());
    for (int a : now)
      for (int b : now) grew |= stabs.insert(lat.intersect(a, b)).second;
  }
  std::vector<std::vector<int>> d(lat.count());
  for (int h = 0; h < lat.count(); ++h) {
    std::set<int> at;
    for (int s : stabs) at.insert(lat.intersect(s, h));
    d[h].assign(at.begin(), at.end());
  }
  return StabilizerDatum(u.lattice(), std::move(d));
}

TransferSystem linear_isometries_system(const PermUniverse& u) {
  const auto& lat = *u.lattice();
  const Group& g = lat.group();
  const int n = lat.count();
  std::vector<char> edges(static_cast<std::size_t>(n) * n, 0);
  for (int h = 0; h < n; ++h) {
    const auto& hs = lat.subgroup(h).elements;
    // Orbit types of the restriction: H ∩ xLx^-1, plus H itself.
    std::set<int> present = {h};
    for (int l : u.lambda())
      for (int x = 0; x < g.order(); ++x) present.insert(lat.rep_under(h, lat.intersect(h, lat.conjugate(x, l))));
    for (int k : lat.subgroups_of(h)) {
      bool ok = true;
      for (int m : present) {
        for (int x : hs)
          if (!present.count(lat.rep_under(h, lat.intersect(k, lat.conjugate(x, m))))) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      edges[static_cast<std::size_t>(k) * n + h] = ok;
    }
  }
  if (auto v = closure_violation(lat, edges))
    throw InputError("linear isometries: relation is not a transfer system (" + *v + ")");
  std::vector<std::pair<int, int>> list;
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h)
      if (edges[static_cast<std::size_t>(k) * n + h]) list.emplace_back(k, h);
  return TransferSystem::from_closed_edges(u.lattice(), list);
}

DisksIsometries disks_isometries_pair(const PermUniverse& u) {
  auto disks = little_disks_system(stabilizers_of_perm_universe(u));
  auto isometries = linear_isometries_system(u);
  auto report = is_compatible(disks, isometries);
  return {std::move(disks), std::move(isometries), std::move(report)};
}

}  // namespace bipoly
