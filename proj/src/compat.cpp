#include "bipoly/compat.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bipoly {

using boost::multiprecision::cpp_int;

namespace {

void require_same_lattice(const TransferSystem& a, const TransferSystem& b, const char* what) {
  if (a.lattice() != b.lattice()) throw InputError(std::string(what) + ": transfer systems on different lattices");
}

/// Calls visit(seq) for each non-decreasing sequence of length `size` over 0..n-1, lexicographically.
void for_each_multiset(int n, int size, const std::function<bool(const std::vector<int>&)>& visit) {
  if (size > 0 && n == 0) return;
  std::vector<int> seq(size, 0);
  while (true) {
    if (!visit(seq)) return;
    int i = size - 1;
    while (i >= 0 && seq[i] == n - 1) --i;
    if (i < 0) return;
    ++seq[i];
    for (int j = i + 1; j < size; ++j) seq[j] = seq[i];
  }
}

std::vector<std::pair<int, int>> with_multiplicity(const std::vector<int>& orbits) {
  std::map<int, int> counts;
  for (int m : orbits) ++counts[m];
  return {counts.begin(), counts.end()};
}

}  // namespace

std::map<int, long long> coinduced_orbit_types(const Lattice& lat, int k, int h,
                                               const std::vector<std::pair<int, int>>& t_orbits) {
  if (!lat.leq(k, h)) throw InputError("coinduced_orbit_types: K is not contained in H");
  const Group& g = lat.group();
  const auto& K = lat.subgroup(k);
  const auto& H = lat.subgroup(h);

  // |T^J| for J <= K, with T = sum of mult copies of K/M.
  std::map<int, cpp_int> fixed_in_t;
  auto fixed_points_of_t = [&](int j) -> const cpp_int& {
    auto it = fixed_in_t.find(j);
    if (it != fixed_in_t.end()) return it->second;
    cpp_int total = 0;
    for (auto [m, mult] : t_orbits) {
      long long hits = 0;
      for (int x : K.elements)
        if (lat.leq(j, lat.conjugate(x, m))) ++hits;
      total += cpp_int(mult) * (hits / lat.subgroup(m).size());
    }
    return fixed_in_t.emplace(j, total).first->second;
  };

  // Map^K(H,T)^L is a product over double cosets KxL of T^{K ∩ xLx^-1}.
  const auto subs = lat.subgroups_of(h);
  std::map<int, cpp_int> marks;
  for (int l : subs) {
    std::vector<char> seen(g.order(), 0);
    cpp_int mark = 1;
    for (int x : H.elements) {
      if (seen[x]) continue;
      for (int a : K.elements)
        for (int b : lat.subgroup(l).elements) seen[g.mul(g.mul(a, x), b)] = 1;
      mark *= fixed_points_of_t(lat.intersect(k, lat.conjugate(x, l)));
      if (mark == 0) break;
    }
    marks[l] = mark;
  }

  std::map<int, cpp_int> per_class;
  for (int l : subs) {
    cpp_int exact = 0;
    for (int l2 : subs)
      if (lat.leq(l, l2)) exact += lat.moebius(l, l2) * marks[l2];
    if (exact != 0) per_class[lat.rep_under(h, l)] += exact;
  }
  std::map<int, long long> out;
  for (auto& [cls, points] : per_class) {
    const cpp_int orbits = points / lat.index(cls, h);
    out[cls] = orbits > LLONG_MAX ? LLONG_MAX : static_cast<long long>(orbits);
  }
  return out;
}

std::vector<int> admissible_orbit_types(const TransferSystem& o, int k) {
  const Lattice& lat = *o.lattice();
  std::vector<int> out;
  for (int m : lat.subgroups_of(k))
    if (o.has(m, k) && lat.rep_under(k, m) == m) out.push_back(m);
  return out;
}

namespace {

/// Smallest admissible T (by orbit count, then lexicographically) whose
/// coinduction along (k, h) is not O_a-admissible.
std::optional<CompatWitness> find_witness(const TransferSystem& o_a, int k, int h, long long& checked) {
  const LatticePtr& lat = o_a.lattice();
  const auto types = admissible_orbit_types(o_a, k);
  std::optional<CompatWitness> found;
  for (int size = 1; size <= lat->index(k, h) && !found; ++size)
    for_each_multiset(static_cast<int>(types.size()), size, [&](const std::vector<int>& seq) {
      ++checked;
      std::vector<int> orbits;
      for (int i : seq) orbits.push_back(types[i]);
      for (auto [cls, count] : coinduced_orbit_types(*lat, k, h, with_multiplicity(orbits)))
        if (!o_a.has(cls, h)) {
          found = CompatWitness{k, h, orbits, gset_from_orbit_types(lat, k, orbits),
                                OrbitType{cls, static_cast<int>(std::min<long long>(count, INT_MAX))}};
          return false;
        }
      return true;
    });
  return found;
}

}  // namespace

CompatReport is_compatible(const TransferSystem& o_a, const TransferSystem& o_m) {
  require_same_lattice(o_a, o_m, "is_compatible");
  const Lattice& lat = *o_a.lattice();
  CompatReport report;
  for (auto [k, h] : o_m.edge_class_reps()) {
    // [H:K] copies of every admissible orbit contain each test set of at most [H:K] orbits.
    std::vector<std::pair<int, int>> saturated;
    for (int m : admissible_orbit_types(o_a, k)) saturated.emplace_back(m, lat.index(k, h));
    ++report.checked_pairs;
    for (auto [cls, count] : coinduced_orbit_types(lat, k, h, saturated)) {
      if (o_a.has(cls, h)) continue;
      report.compatible = false;
      report.witness = find_witness(o_a, k, h, report.checked_pairs);
      return report;
    }
  }
  return report;
}

bool subconjugacy_filter(const TransferSystem& o_a, const TransferSystem& o_m) {
  require_same_lattice(o_a, o_m, "subconjugacy_filter");
  const Lattice& lat = *o_a.lattice();
  for (auto [k, h] : o_m.nontrivial_edges())
    for (int l = 0; l < lat.count(); ++l)
      if (lat.leq(k, l) && lat.leq(l, h) && !o_a.has(l, h)) return false;
  return true;
}

TransferSystem additive_hull(const TransferSystem& o_a, const TransferSystem& o_m) {
  require_same_lattice(o_a, o_m, "additive_hull");
  const Lattice& lat = *o_a.lattice();
  TransferSystem current = o_a;
  while (true) {
    auto seeds = current.nontrivial_edges();
    bool grew = false;
    for (auto [k, h] : o_m.edge_class_reps()) {
      std::vector<std::pair<int, int>> saturated;
      for (int m : admissible_orbit_types(current, k)) saturated.emplace_back(m, lat.index(k, h));
      for (const auto& entry : coinduced_orbit_types(lat, k, h, saturated))
        if (!current.has(entry.first, h)) {
          seeds.emplace_back(entry.first, h);
          grew = true;
        }
    }
    if (!grew) return current;
    current = TransferSystem::from_edges(o_a.lattice(), seeds);
  }
}

TransferSystem multiplicative_hull(const TransferSystem& o_a) {
  const LatticePtr& lat = o_a.lattice();
  TransferSystem result = TransferSystem::trivial(lat);
  for (auto [k, h] : TransferSystem::complete(lat).edge_class_reps()) {
    auto single = TransferSystem::from_edges(lat, {{k, h}});
    if (is_compatible(o_a, single).compatible) result = join(result, single);
  }
  return result;
}

PairCensus census(const LatticePtr& lattice) {
  PairCensus c;
  c.group = lattice->group().name();
  c.systems = enumerate_transfer_systems(lattice);
  const int n = static_cast<int>(c.systems.size());
  c.n_systems = n;
  c.total_pairs = static_cast<long long>(n) * n;
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m) {
      const bool comparable = leq(c.systems[m], c.systems[a]);
      const bool filter = subconjugacy_filter(c.systems[a], c.systems[m]);
      const bool compatible = is_compatible(c.systems[a], c.systems[m]).compatible;
      c.comparable_pairs += comparable;
      c.filter_pass += filter;
      c.compatible_pairs += compatible;
      if (comparable && !compatible) c.comparable_incompatible.emplace_back(a, m);
      if (compatible && (!comparable || !filter)) c.anomalies.emplace_back(a, m);
      if (filter && !comparable) c.anomalies.emplace_back(a, m);
    }
  return c;
}

const std::vector<int>& BruteForceOracle::stabilizers(const Lattice& lat, int k, int h,
                                                      const std::vector<int>& t_orbits) {
  const auto key = std::make_tuple(&lat, k, h, t_orbits);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Group& g = lat.group();
  // Orbits of T laid out as explicit cosets kM; point (orbit, coset) -> id.
  struct Point {
    int orbit;
    int coset_rep;
  };
  std::vector<Point> points;
  std::vector<std::vector<int>> coset_id(t_orbits.size(), std::vector<int>(g.order(), -1));
  for (std::size_t o = 0; o < t_orbits.size(); ++o)
    for (int a : lat.subgroup(k).elements) {
      if (coset_id[o][a] >= 0) continue;
      for (int b : lat.subgroup(t_orbits[o]).elements) coset_id[o][g.mul(a, b)] = static_cast<int>(points.size());
      points.push_back({static_cast<int>(o), a});
    }
  auto act_t = [&](int e, int p) { return coset_id[points[p].orbit][g.mul(e, points[p].coset_rep)]; };

  // Right coset representatives r_i of K in H.
  std::vector<int> reps, right_coset(g.order(), -1);
  for (int a : lat.subgroup(h).elements) {
    if (right_coset[a] >= 0) continue;
    for (int b : lat.subgroup(k).elements) right_coset[g.mul(b, a)] = static_cast<int>(reps.size());
    reps.push_back(a);
  }
  const int m = static_cast<int>(reps.size());
  const int n = static_cast<int>(points.size());
  // A function is its value vector on the representatives; f(k r_i) = k f(r_i).
  // (h'·f)(r_i) = f(r_i h') = k' f(r_j) where r_i h' = k' r_j.
  std::vector<std::vector<std::pair<int, int>>> shift(g.order());
  for (int a : lat.subgroup(h).elements)
    for (int i = 0; i < m; ++i) {
      const int prod = g.mul(reps[i], a);
      const int j = right_coset[prod];
      shift[a].emplace_back(j, g.mul(prod, g.inv(reps[j])));
    }

  std::set<int> stabs;
  std::vector<int> value(m, 0);
  const bool nonempty = n > 0 || m == 0;
  while (nonempty) {
    ElementSet stab;
    for (int a : lat.subgroup(h).elements) {
      bool fixes = true;
      for (int i = 0; i < m && fixes; ++i) fixes = act_t(shift[a][i].second, value[shift[a][i].first]) == value[i];
      if (fixes) stab.set(static_cast<std::size_t>(a));
    }
    stabs.insert(lat.find(stab));
    int i = 0;
    while (i < m && ++value[i] == n) value[i++] = 0;
    if (i == m) break;
  }
  return cache_.emplace(key, std::vector<int>(stabs.begin(), stabs.end())).first->second;
}

bool BruteForceOracle::compatible(const TransferSystem& o_a, const TransferSystem& o_m, int orbit_budget) {
  require_same_lattice(o_a, o_m, "brute_force_compatible");
  const Lattice& lat = *o_a.lattice();
  const auto edges = o_m.nontrivial_edges();
  for (auto [k, h] : edges)
    if (orbit_budget < lat.index(k, h))
      throw InputError("brute_force_compatible: orbit budget below index [H:K]");
  for (auto [k, h] : edges) {
    std::vector<int> types;
    for (int m : lat.subgroups_of(k))
      if (o_a.has(m, k) && lat.rep_under(k, m) == m) types.push_back(m);
    for (int size = 0; size <= orbit_budget; ++size) {
      bool ok = true;
      for_each_multiset(static_cast<int>(types.size()), size, [&](const std::vector<int>& seq) {
        std::vector<int> orbits;
        for (int i : seq) orbits.push_back(types[i]);
        for (int l : stabilizers(lat, k, h, orbits))
          if (!o_a.has(l, h)) ok = false;
        return ok;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool brute_force_compatible(const TransferSystem& o_a, const TransferSystem& o_m, int orbit_budget) {
  BruteForceOracle oracle;
  return oracle.compatible(o_a, o_m, orbit_budget);
}

CoinductionProbe check_coinduction_preserves(const TransferSystem& o_a, const TransferSystem& o_m) {
  require_same_lattice(o_a, o_m, "check_coinduction_preserves");
  if (!is_compatible(o_a, o_m).compatible)
    throw InputError("check_coinduction_preserves: pair is not compatible");
  const LatticePtr& lat = o_a.lattice();
  CoinductionProbe probe;
  for (auto [k, h] : o_m.edge_class_reps()) {
    std::vector<int> k_types;
    for (int m : lat->subgroups_of(k))
      if (lat->rep_under(k, m) == m) k_types.push_back(m);
    const int point_bound = lat->index(k, h) * static_cast<int>(k_types.size());
    for (int y_orbits = 1; y_orbits <= 2; ++y_orbits)
      for_each_multiset(static_cast<int>(k_types.size()), y_orbits, [&](const std::vector<int>& yseq) {
        std::vector<int> ystabs;
        for (int i : yseq) ystabs.push_back(k_types[i]);
        const GSet y = gset_from_orbit_types(lat, k, ystabs);
        // Fiber choices per target orbit: multisets of at most two admissible orbits.
        std::vector<std::vector<std::vector<int>>> choices(y.orbit_count());
        for (int o = 0; o < y.orbit_count(); ++o) {
          const int l = y.orbit_stabilizer(o);
          const auto adm = admissible_orbit_types(o_a, l);
          for (int sz = 0; sz <= 2; ++sz)
            for_each_multiset(static_cast<int>(adm.size()), sz, [&](const std::vector<int>& s) {
              std::vector<int> f;
              for (int i : s) f.push_back(adm[i]);
              choices[o].push_back(f);
              return true;
            });
        }
        std::vector<std::size_t> pick(y.orbit_count(), 0);
        while (probe.preserves) {
          GMap f = from_empty(y);
          int points = 0;
          for (int o = 0; o < y.orbit_count(); ++o)
            for (int m : choices[o][pick[o]]) {
              GMap piece = orbit_map_to(y, y.orbit_rep(o), m);
              points += piece.source().size();
              f = copair(f, piece);
            }
          if (points <= point_bound) {
            ++probe.maps_checked;
            if (!map_in_indexing_category(o_a, coinduce_map(h, f))) {
              probe.preserves = false;
              probe.finding = "coinduction along (" + lat->label(k) + ", " + lat->label(h) +
                              ") leaves the indexing category for a map onto a " +
                              std::to_string(y.size()) + "-point set from a " + std::to_string(points) +
                              "-point set";
            }
          }
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
        return probe.preserves;
      });
  }
  return probe;
}

}  // namespace bipoly
