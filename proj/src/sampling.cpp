#include "bipoly/sampling.hpp"

namespace bipoly {

GSet Sampler::gset(const LatticePtr& lattice, int acting, int max_orbits, bool with_fixed_point) {
  std::vector<int> types;
  for (int s : lattice->subgroups_of(acting))
    if (lattice->rep_under(acting, s) == s) types.push_back(s);
  std::vector<int> orbits;
  if (with_fixed_point) orbits.push_back(acting);
  const int n = uniform(0, max_orbits);
  for (int i = 0; i < n; ++i) orbits.push_back(types[uniform(0, static_cast<int>(types.size()) - 1)]);
  return gset_from_orbit_types(lattice, acting, orbits);
}

std::optional<GMap> Sampler::map_to(const GSet& source, const GSet& target) {
  const auto& lat = *source.lattice();
  const auto& acting = lat.subgroup(source.acting()).elements;
  std::vector<int> pts(source.size(), -1);
  for (int o = 0; o < source.orbit_count(); ++o) {
    const int stab = source.orbit_stabilizer(o);
    std::vector<int> candidates;
    for (int q = 0; q < target.size(); ++q)
      if (lat.leq(stab, target.stabilizer(q))) candidates.push_back(q);
    if (candidates.empty()) return std::nullopt;
    const int q = candidates[uniform(0, static_cast<int>(candidates.size()) - 1)];
    const int r = source.orbit_rep(o);
    for (int e : acting) pts[source.act(e, r)] = target.act(e, q);
  }
  return GMap(source, target, std::move(pts));
}

GMap Sampler::map_in(const TransferSystem& o, const GSet& target, int max_orbits) {
  const auto& lat = *target.lattice();
  GMap out = from_empty(target);
  if (target.size() == 0) return out;
  const int n = uniform(0, max_orbits);
  for (int i = 0; i < n; ++i) {
    const int q = uniform(0, target.size() - 1);
    const int stab = target.stabilizer(q);
    std::vector<int> sources;
    for (int l : lat.subgroups_of(stab))
      if (o.has(l, stab)) sources.push_back(l);
    const int l = sources[uniform(0, static_cast<int>(sources.size()) - 1)];
    out = copair(out, orbit_map_to(target, q, l));
  }
  return out;
}

Bispan Sampler::bispan_in(const SubgraphSpec& spec, const GSet& s, const GSet& t, int max_orbits) {
  GMap h = map_in(spec.o_a, t, max_orbits);
  GMap g = map_in(spec.o_m, h.source(), max_orbits);
  auto f = map_to(g.source(), s);
  if (!f) throw InputError("bispan_in: source has no point fixed by a middle stabilizer");
  return Bispan(*f, g, h);
}

}  // namespace bipoly
