#include "bipoly/bispan.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace bipoly {

Bispan::Bispan(GMap f, GMap g, GMap h) : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  if (!f_.source().same_as(g_.source())) throw InputError("Bispan: f and g have different sources");
  if (!g_.target().same_as(h_.source())) throw InputError("Bispan: g does not land in the source of h");
  if (f_.target().lattice() != h_.target().lattice() || f_.target().acting() != h_.target().acting())
    throw InputError("Bispan: endpoints over different groups");
}

Bispan gen_R(const GMap& f) {
  const GMap id = identity_map(f.source());
  return Bispan(f, id, id);
}

Bispan gen_N(const GMap& g) { return Bispan(identity_map(g.source()), g, identity_map(g.target())); }

Bispan gen_T(const GMap& h) {
  const GMap id = identity_map(h.source());
  return Bispan(id, id, h);
}

Bispan identity(const GSet& s) {
  const GMap id = identity_map(s);
  return Bispan(id, id, id);
}

Bispan compose(const Bispan& q, const Bispan& p_in, long long point_cap) {
  std::optional<Bispan> aligned;
  if (!p_in.target().same_as(q.source())) {
    auto iso = iso_test(p_in.target(), q.source());
    if (!iso) throw InputError("compose: target and source are not isomorphic");
    aligned.emplace(p_in.f(), p_in.g(), compose(*iso, p_in.h()));
  }
  const Bispan& p = aligned ? *aligned : p_in;

  // R_{fQ} T_{hP} = T_{h''} R_{f''}
  Pullback x = pullback(p.h(), q.f());
  // N_{gQ} T_{h''} = T_{h'} N_{g'} R_{f'}
  ExponentialDiagram ed = exponential_diagram(q.g(), x.second, point_cap);
  GMap k = compose(x.first, ed.f_prime);
  // R_k N_{gP} = N_{g''} R_{k'}
  Pullback y = pullback(p.g(), k);
  return Bispan(compose(p.f(), y.first), compose(ed.g_prime, y.second), compose(q.h(), ed.h_prime));
}

SubgraphSpec SubgraphSpec::checked(TransferSystem o_a, TransferSystem o_m) {
  if (o_a.lattice() != o_m.lattice()) throw InputError("SubgraphSpec: systems on different lattices");
  if (!is_compatible(o_a, o_m).compatible) throw InputError("SubgraphSpec: pair is not compatible");
  return {std::move(o_a), std::move(o_m)};
}

SubgraphSpec SubgraphSpec::unchecked(TransferSystem o_a, TransferSystem o_m) { return {std::move(o_a), std::move(o_m)}; }

bool in_subgraph(const Bispan& p, const SubgraphSpec& spec) {
  return map_in_indexing_category(spec.o_m, p.g()) && map_in_indexing_category(spec.o_a, p.h());
}

Bispan zero(const GSet& s, const GSet& t) {
  const GSet none = GSet::empty(s.lattice(), s.acting());
  return Bispan(from_empty(s), identity_map(none), from_empty(t));
}

Bispan one(const GSet& s, const GSet& t) { return Bispan(from_empty(s), from_empty(t), identity_map(t)); }

namespace {

void require_same_endpoints(const Bispan& p, const Bispan& q, const char* what) {
  if (!p.source().same_as(q.source()) || !p.target().same_as(q.target()))
    throw InputError(std::string(what) + ": endpoints differ");
}

}  // namespace

Bispan add(const Bispan& p, const Bispan& q) {
  require_same_endpoints(p, q, "add");
  return Bispan(copair(p.f(), q.f()), coproduct_map(p.g(), q.g()), copair(p.h(), q.h()));
}

Bispan mul(const Bispan& p, const Bispan& q) {
  require_same_endpoints(p, q, "mul");
  // P = [S <-a T1 -b-> T2 -c-> U], Q = [S <-a' V1 -b'-> V2 -c'-> U]
  Pullback a = pullback(compose(p.h(), p.g()), q.h());  // T1 x_U V2
  Pullback b = pullback(p.h(), compose(q.h(), q.g()));  // T2 x_U V1
  Pullback m = pullback(p.h(), q.h());                  // T2 x_U V2
  GMap from_a = pullback_pairing(m, compose(p.g(), a.first), a.second);
  GMap from_b = pullback_pairing(m, b.first, compose(q.g(), b.second));
  return Bispan(copair(compose(p.f(), a.first), compose(q.f(), b.second)), copair(from_a, from_b),
                compose(p.h(), m.first));
}

Bispan pairing(const Bispan& p, const Bispan& q) {
  if (!p.source().same_as(q.source())) throw InputError("pairing: sources differ");
  return Bispan(copair(p.f(), q.f()), coproduct_map(p.g(), q.g()), coproduct_map(p.h(), q.h()));
}

Projections projections(const GSet& s, const GSet& t) {
  Coproduct sum = coproduct(s, t);
  return {gen_R(sum.left), gen_R(sum.right)};
}

BispanFingerprint fingerprint(const Bispan& p) {
  const auto& lat = *p.u2().lattice();
  const int acting = p.u2().acting();
  const GSet& u1 = p.u1();
  const GSet& u2 = p.u2();
  std::vector<std::vector<int>> over(u2.orbit_count());
  for (int o = 0; o < u1.orbit_count(); ++o) {
    const int r = u1.orbit_rep(o);
    over[u2.orbit_of(p.g()(r))].push_back(lat.rep_under(acting, u1.orbit_stabilizer(o)) * (p.source().orbit_count() + 1) +
                                           p.source().orbit_of(p.f()(r)));
  }
  BispanFingerprint out;
  for (int o = 0; o < u2.orbit_count(); ++o) {
    std::vector<int> d = {lat.rep_under(acting, u2.orbit_stabilizer(o)), p.target().orbit_of(p.h()(u2.orbit_rep(o)))};
    std::sort(over[o].begin(), over[o].end());
    d.insert(d.end(), over[o].begin(), over[o].end());
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Perfect matching of left items to right items, adjacency as a predicate.
bool perfect_matching(int n, const std::vector<std::vector<char>>& adj) {
  std::vector<int> match_right(n, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int l, std::vector<char>& seen) {
    for (int r = 0; r < n; ++r) {
      if (!adj[l][r] || seen[r]) continue;
      seen[r] = 1;
      if (match_right[r] < 0 || augment(match_right[r], seen)) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < n; ++l) {
    std::vector<char> seen(n, 0);
    if (!augment(l, seen)) return false;
  }
  return true;
}

}  // namespace

bool bispan_eq(const Bispan& p, const Bispan& q) {
  if (!p.source().same_as(q.source()) || !p.target().same_as(q.target())) return false;
  if (p.u1().size() != q.u1().size() || p.u2().size() != q.u2().size()) return false;
  if (fingerprint(p) != fingerprint(q)) return false;

  const auto& acting = p.u2().lattice()->subgroup(p.u2().acting()).elements;
  const GSet& a1 = p.u1();
  const GSet& a2 = p.u2();
  const GSet& b1 = q.u1();
  const GSet& b2 = q.u2();
  const int n2 = a2.orbit_count();

  std::vector<std::vector<int>> a1_over(n2), b1_over(b2.orbit_count());
  for (int o = 0; o < a1.orbit_count(); ++o) a1_over[a2.orbit_of(p.g()(a1.orbit_rep(o)))].push_back(o);
  for (int o = 0; o < b1.orbit_count(); ++o) b1_over[b2.orbit_of(q.g()(b1.orbit_rep(o)))].push_back(o);

  std::vector<int> beta(a2.size(), -1);
  std::vector<char> used(b2.orbit_count(), 0);

  // U1 orbits over a2-orbit o must match those over its image.
  auto fiber_matches = [&](int o, int image) {
    const auto& left = a1_over[o];
    const auto& right = b1_over[image];
    if (left.size() != right.size()) return false;
    const int n = static_cast<int>(left.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      const int u = a1.orbit_rep(left[i]);
      const int stab = a1.orbit_stabilizer(left[i]);
      for (int j = 0; j < n; ++j) {
        const int r = b1.orbit_rep(right[j]);
        for (int e : acting) {
          const int cand = b1.act(e, r);
          if (b1.stabilizer(cand) == stab && q.f()(cand) == p.f()(u) && q.g()(cand) == beta[p.g()(u)]) {
            adj[i][j] = 1;
            break;
          }
        }
      }
    }
    return perfect_matching(n, adj);
  };

  std::function<bool(int)> search = [&](int o) {
    if (o == n2) return true;
    const int r = a2.orbit_rep(o);
    const int stab = a2.orbit_stabilizer(o);
    for (int c = 0; c < b2.size(); ++c) {
      const int image = b2.orbit_of(c);
      if (used[image] || q.h()(c) != p.h()(r) || b2.stabilizer(c) != stab) continue;
      for (int e : acting) beta[a2.act(e, r)] = b2.act(e, c);
      used[image] = 1;
      if (fiber_matches(o, image) && search(o + 1)) return true;
      used[image] = 0;
    }
    return false;
  };
  return search(0);
}

EscapePair escape_pair(const CompatWitness& w) {
  const LatticePtr& lat = w.t.lattice();
  const int top = lat->top();
  GMap to_k = from_empty(coset_space(lat, top, w.k));
  for (int l : w.t_orbits) to_k = copair(to_k, orbit_quotient(lat, top, l, w.k));
  return {gen_T(to_k), gen_N(orbit_quotient(lat, top, w.k, w.h))};
}

}  // namespace bipoly
