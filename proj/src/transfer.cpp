#include "bipoly/transfer.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bipoly {

namespace {

void require_same_lattice(const TransferSystem& a, const TransferSystem& b, const char* what) {
  if (a.lattice() != b.lattice()) throw InputError(std::string(what) + ": transfer systems on different lattices");
}

}  // namespace

void TransferSystem::close() {
  const Lattice& lat = *lattice_;
  const int n = lat.count();
  const int order = lat.group().order();
  for (int h = 0; h < n; ++h) edges_[idx(h, h)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int k, int h) {
      if (!edges_[idx(k, h)]) {
        edges_[idx(k, h)] = 1;
        changed = true;
      }
    };
    for (int k = 0; k < n; ++k)
      for (int h = 0; h < n; ++h) {
        if (!edges_[idx(k, h)] || k == h) continue;
        for (int g = 0; g < order; ++g) add(lat.conjugate(g, k), lat.conjugate(g, h));
        for (int l = 0; l < n; ++l)
          if (lat.leq(l, h)) add(lat.intersect(k, l), l);
        for (int j = 0; j < n; ++j)
          if (edges_[idx(j, k)]) add(j, h);
      }
  }
}

std::optional<std::string> closure_violation(const Lattice& lat, const std::vector<char>& e) {
  const int n = lat.count();
  auto has = [&](int k, int h) { return e[static_cast<std::size_t>(k) * n + h] != 0; };
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h)
      if (has(k, h) && !lat.leq(k, h))
        return "edge (" + std::to_string(k) + "," + std::to_string(h) + ") with K not contained in H";
  for (int h = 0; h < n; ++h)
    if (!has(h, h)) return "not reflexive at " + std::to_string(h);
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h) {
      if (!has(k, h)) continue;
      const std::string edge = "(" + std::to_string(k) + "," + std::to_string(h) + ")";
      for (int g = 0; g < lat.group().order(); ++g)
        if (!has(lat.conjugate(g, k), lat.conjugate(g, h))) return "not conjugation-closed at " + edge;
      for (int l = 0; l < n; ++l)
        if (lat.leq(l, h) && !has(lat.intersect(k, l), l))
          return "not restriction-closed at " + edge + " restricted to " + std::to_string(l);
      for (int j = 0; j < n; ++j)
        if (has(j, k) && !has(j, h)) return "not transitive at " + edge + " from " + std::to_string(j);
    }
  return std::nullopt;
}

TransferSystem TransferSystem::from_edges(LatticePtr lattice, const std::vector<std::pair<int, int>>& seeds) {
  const int n = lattice->count();
  std::vector<char> e(static_cast<std::size_t>(n) * n, 0);
  for (auto [k, h] : seeds) {
    if (k < 0 || h < 0 || k >= n || h >= n) throw InputError("edge index out of range");
    if (!lattice->leq(k, h))
      throw InputError("seed edge (" + std::to_string(k) + "," + std::to_string(h) + ") has K not contained in H");
    e[static_cast<std::size_t>(k) * n + h] = 1;
  }
  TransferSystem t(std::move(lattice), std::move(e));
  t.close();
  return t;
}

TransferSystem TransferSystem::from_closed_edges(LatticePtr lattice, const std::vector<std::pair<int, int>>& edges) {
  const int n = lattice->count();
  std::vector<char> e(static_cast<std::size_t>(n) * n, 0);
  for (int h = 0; h < n; ++h) e[static_cast<std::size_t>(h) * n + h] = 1;
  for (auto [k, h] : edges) {
    if (k < 0 || h < 0 || k >= n || h >= n) throw InputError("edge index out of range");
    e[static_cast<std::size_t>(k) * n + h] = 1;
  }
  if (auto why = closure_violation(*lattice, e)) throw InputError("edge set is not a transfer system: " + *why);
  return TransferSystem(std::move(lattice), std::move(e));
}

TransferSystem TransferSystem::trivial(LatticePtr lattice) { return from_edges(std::move(lattice), {}); }

TransferSystem TransferSystem::complete(LatticePtr lattice) {
  std::vector<std::pair<int, int>> all;
  for (int k = 0; k < lattice->count(); ++k)
    for (int h = 0; h < lattice->count(); ++h)
      if (lattice->leq(k, h)) all.emplace_back(k, h);
  return from_edges(std::move(lattice), all);
}

std::vector<std::pair<int, int>> TransferSystem::nontrivial_edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = lattice_->count();
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h)
      if (k != h && has(k, h)) out.emplace_back(k, h);
  return out;
}

std::vector<std::pair<int, int>> TransferSystem::edge_class_reps() const {
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> out;
  for (auto [k, h] : nontrivial_edges()) {
    if (seen.count({k, h})) continue;
    out.emplace_back(k, h);
    for (int g = 0; g < lattice_->group().order(); ++g)
      seen.insert({lattice_->conjugate(g, k), lattice_->conjugate(g, h)});
  }
  return out;
}

int TransferSystem::edge_count() const { return static_cast<int>(nontrivial_edges().size()); }

AdmissibleSetQuery is_admissible_set(const TransferSystem& o, const GSet& t) {
  if (o.lattice() != t.lattice()) throw InputError("is_admissible_set: different lattices");
  AdmissibleSetQuery q;
  for (int orb = 0; orb < t.orbit_count(); ++orb) {
    const int stab = t.orbit_stabilizer(orb);
    if (o.has(stab, t.acting())) continue;
    const int cls = o.lattice()->rep_under(t.acting(), stab);
    int mult = 0;
    for (int other = 0; other < t.orbit_count(); ++other)
      if (o.lattice()->rep_under(t.acting(), t.orbit_stabilizer(other)) == cls) ++mult;
    q.admissible = false;
    q.offending_orbit = OrbitType{cls, mult};
    break;
  }
  return q;
}

bool map_in_indexing_category(const TransferSystem& o, const GMap& f) {
  if (o.lattice() != f.source().lattice()) throw InputError("map_in_indexing_category: different lattices");
  const GSet& x = f.source();
  // Every source orbit meets the fiber over the representative's image, where
  // its stabilizer inside stab(f(x)) is stab(x).
  for (int orb = 0; orb < x.orbit_count(); ++orb) {
    const int p = x.orbit_rep(orb);
    if (!o.has(x.orbit_stabilizer(orb), f.target().stabilizer(f(p)))) return false;
  }
  return true;
}

std::vector<TransferSystem> enumerate_transfer_systems(const LatticePtr& lattice, std::size_t cap) {
  const auto edge_classes = TransferSystem::complete(lattice).edge_class_reps();
  std::set<std::vector<char>> seen;
  std::vector<TransferSystem> found{TransferSystem::trivial(lattice)};
  seen.insert(found.front().encoding());
  // Every system is reached by adding its edge classes one at a time.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto [k, h] : edge_classes) {
      if (found[i].has(k, h)) continue;
      auto seeds = found[i].nontrivial_edges();
      seeds.emplace_back(k, h);
      auto next = TransferSystem::from_edges(lattice, seeds);
      if (seen.insert(next.encoding()).second) {
        found.push_back(std::move(next));
        if (found.size() > cap)
          throw ResourceError("transfer system enumeration exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const TransferSystem& a, const TransferSystem& b) { return a.encoding() < b.encoding(); });
  return found;
}

TransferSystem meet(const TransferSystem& a, const TransferSystem& b) {
  require_same_lattice(a, b, "meet");
  std::vector<std::pair<int, int>> common;
  for (auto e : a.nontrivial_edges())
    if (b.has(e.first, e.second)) common.push_back(e);
  return TransferSystem::from_closed_edges(a.lattice(), common);
}

TransferSystem join(const TransferSystem& a, const TransferSystem& b) {
  require_same_lattice(a, b, "join");
  auto seeds = a.nontrivial_edges();
  auto more = b.nontrivial_edges();
  seeds.insert(seeds.end(), more.begin(), more.end());
  return TransferSystem::from_edges(a.lattice(), seeds);
}

bool leq(const TransferSystem& a, const TransferSystem& b) {
  require_same_lattice(a, b, "leq");
  for (auto [k, h] : a.nontrivial_edges())
    if (!b.has(k, h)) return false;
  return true;
}

}  // namespace bipoly
