#include "bipoly/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace bipoly {

namespace {

void require_same_context(const GSet& x, const GSet& y, const char* what) {
  if (x.lattice() != y.lattice() || x.acting() != y.acting())
    throw InputError(std::string(what) + ": sets over different groups");
}

void check_points(long long n, long long cap, const char* what) {
  if (n > cap)
    throw ResourceError(std::string(what) + ": " + std::to_string(n) + " points exceeds cap " +
                        std::to_string(cap));
}

std::vector<int> blank_action(const Group& g, long long size) {
  return std::vector<int>(static_cast<std::size_t>(g.order() * size), -1);
}

}  // namespace

GSet::GSet(LatticePtr lattice, int acting, int size, std::vector<int> action)
    : lattice_(std::move(lattice)), acting_(acting), size_(size), action_(std::move(action)) {
  if (!lattice_) throw InputError("GSet needs a lattice");
  if (acting_ < 0 || acting_ >= lattice_->count()) throw InputError("acting subgroup index out of range");
  if (size_ < 0) throw InputError("negative GSet size");
  const Group& g = lattice_->group();
  if (action_.size() != static_cast<std::size_t>(g.order()) * size_)
    throw InputError("action table has wrong shape");
  const auto& sub = lattice_->subgroup(acting_);
  for (int a = 0; a < g.order(); ++a)
    for (int p = 0; p < size_; ++p) {
      const int v = act(a, p);
      if (!sub.contains(a)) {
        action_[static_cast<std::size_t>(a) * size_ + p] = -1;
        continue;
      }
      if (v < 0 || v >= size_) throw InputError("action value out of range");
    }
  for (int p = 0; p < size_; ++p)
    if (act(g.identity(), p) != p) throw InputError("identity does not act trivially");
  for (int a : sub.elements)
    for (int b : sub.elements)
      for (int p = 0; p < size_; ++p)
        if (act(a, act(b, p)) != act(g.mul(a, b), p))
          throw InputError("action is not compatible with multiplication");
  compute_orbits();
}

GSet GSet::unchecked(LatticePtr lattice, int acting, int size, std::vector<int> action) {
  GSet x;
  x.lattice_ = std::move(lattice);
  x.acting_ = acting;
  x.size_ = size;
  x.action_ = std::move(action);
  x.compute_orbits();
  return x;
}

GSet GSet::empty(LatticePtr lattice, int acting) { return unchecked(std::move(lattice), acting, 0, {}); }

GSet GSet::trivial(LatticePtr lattice, int acting, int n) {
  const Group& g = lattice->group();
  auto action = blank_action(g, n);
  for (int a : lattice->subgroup(acting).elements)
    for (int p = 0; p < n; ++p) action[static_cast<std::size_t>(a) * n + p] = p;
  return unchecked(std::move(lattice), acting, n, std::move(action));
}

void GSet::compute_orbits() {
  orbit_of_.assign(size_, -1);
  orbit_reps_.clear();
  orbit_stabs_.clear();
  const auto& elems = lattice_->subgroup(acting_).elements;
  for (int p = 0; p < size_; ++p) {
    if (orbit_of_[p] >= 0) continue;
    const int o = static_cast<int>(orbit_reps_.size());
    orbit_reps_.push_back(p);
    ElementSet stab;
    for (int a : elems) {
      const int q = act(a, p);
      orbit_of_[q] = o;
      if (q == p) stab.set(static_cast<std::size_t>(a));
    }
    orbit_stabs_.push_back(lattice_->find(stab));
  }
}

int GSet::orbit_size(int o) const {
  return lattice_->subgroup(acting_).size() / lattice_->subgroup(orbit_stabs_[o]).size();
}

int GSet::stabilizer(int p) const {
  ElementSet stab;
  for (int a : lattice_->subgroup(acting_).elements)
    if (act(a, p) == p) stab.set(static_cast<std::size_t>(a));
  return lattice_->find(stab);
}

GMap::GMap(GSet source, GSet target, std::vector<int> points)
    : source_(std::move(source)), target_(std::move(target)), points_(std::move(points)) {
  require_same_context(source_, target_, "GMap");
  if (static_cast<int>(points_.size()) != source_.size()) throw InputError("GMap: wrong number of points");
  for (int v : points_)
    if (v < 0 || v >= target_.size()) throw InputError("GMap: point out of range");
  for (int a : source_.lattice()->subgroup(source_.acting()).elements)
    for (int p = 0; p < source_.size(); ++p)
      if (points_[source_.act(a, p)] != target_.act(a, points_[p]))
        throw InputError("GMap: map is not equivariant");
}

GMap GMap::unchecked(GSet source, GSet target, std::vector<int> points) {
  GMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.points_ = std::move(points);
  return f;
}

namespace {

/// Left cosets aK of K in the acting group, numbered by increasing least element.
std::vector<int> left_coset_index(const Lattice& lat, int acting, int k, std::vector<int>* reps) {
  const Group& g = lat.group();
  std::vector<int> coset_of(g.order(), -1);
  int count = 0;
  for (int h : lat.subgroup(acting).elements) {  // increasing ids
    if (coset_of[h] >= 0) continue;
    if (reps) reps->push_back(h);
    for (int x : lat.subgroup(k).elements) coset_of[g.mul(h, x)] = count;
    ++count;
  }
  return coset_of;
}

}  // namespace

GSet coset_space(const LatticePtr& lattice, int acting, int k) {
  if (!lattice->leq(k, acting)) throw InputError("coset_space: subgroup not contained in acting group");
  const Group& g = lattice->group();
  std::vector<int> reps;
  const auto coset_of = left_coset_index(*lattice, acting, k, &reps);
  const int n = static_cast<int>(reps.size());
  auto action = blank_action(g, n);
  for (int a : lattice->subgroup(acting).elements)
    for (int c = 0; c < n; ++c) action[static_cast<std::size_t>(a) * n + c] = coset_of[g.mul(a, reps[c])];
  return GSet::unchecked(lattice, acting, n, std::move(action));
}

GSet gset_from_orbit_types(const LatticePtr& lattice, int acting, const std::vector<int>& stabilizers) {
  GSet out = GSet::empty(lattice, acting);
  for (int k : stabilizers) {
    if (k < 0 || k >= lattice->count()) throw InputError("orbit type index out of range");
    out = coproduct(out, coset_space(lattice, acting, k)).set;
  }
  return out;
}

GMap identity_map(const GSet& x) {
  std::vector<int> pts(x.size());
  std::iota(pts.begin(), pts.end(), 0);
  return GMap::unchecked(x, x, std::move(pts));
}

GMap compose(const GMap& second, const GMap& first) {
  if (!first.target().same_as(second.source())) throw InputError("compose: maps are not composable");
  std::vector<int> pts(first.source().size());
  for (int p = 0; p < first.source().size(); ++p) pts[p] = second(first(p));
  return GMap::unchecked(first.source(), second.target(), std::move(pts));
}

bool is_bijective(const GMap& f) {
  if (f.source().size() != f.target().size()) return false;
  std::vector<char> hit(f.target().size(), 0);
  for (int v : f.points()) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

GMap to_point(const GSet& x) {
  return GMap::unchecked(x, GSet::trivial(x.lattice(), x.acting(), 1), std::vector<int>(x.size(), 0));
}

GMap from_empty(const GSet& y) { return GMap::unchecked(GSet::empty(y.lattice(), y.acting()), y, {}); }

Coproduct coproduct(const GSet& x, const GSet& y) {
  require_same_context(x, y, "coproduct");
  const Group& g = x.group();
  const int n = x.size() + y.size();
  auto action = blank_action(g, n);
  for (int a : x.lattice()->subgroup(x.acting()).elements) {
    for (int p = 0; p < x.size(); ++p) action[static_cast<std::size_t>(a) * n + p] = x.act(a, p);
    for (int p = 0; p < y.size(); ++p)
      action[static_cast<std::size_t>(a) * n + x.size() + p] = x.size() + y.act(a, p);
  }
  GSet sum = GSet::unchecked(x.lattice(), x.acting(), n, std::move(action));
  std::vector<int> l(x.size()), r(y.size());
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), x.size());
  return {sum, GMap::unchecked(x, sum, std::move(l)), GMap::unchecked(y, sum, std::move(r))};
}

GMap coproduct_map(const GMap& f, const GMap& g) {
  auto src = coproduct(f.source(), g.source()).set;
  auto tgt = coproduct(f.target(), g.target()).set;
  std::vector<int> pts(f.points());
  for (int v : g.points()) pts.push_back(v + f.target().size());
  return GMap::unchecked(std::move(src), std::move(tgt), std::move(pts));
}

GMap copair(const GMap& f, const GMap& g) {
  if (!f.target().same_as(g.target())) throw InputError("copair: maps have different targets");
  auto src = coproduct(f.source(), g.source()).set;
  std::vector<int> pts(f.points());
  pts.insert(pts.end(), g.points().begin(), g.points().end());
  return GMap::unchecked(std::move(src), f.target(), std::move(pts));
}

GMap fold_map(const GSet& x, int copies) {
  if (copies < 0) throw InputError("fold_map: negative copy count");
  GSet src = GSet::empty(x.lattice(), x.acting());
  std::vector<int> pts;
  for (int c = 0; c < copies; ++c) {
    src = coproduct(src, x).set;
    for (int p = 0; p < x.size(); ++p) pts.push_back(p);
  }
  return GMap::unchecked(std::move(src), x, std::move(pts));
}

Product product(const GSet& x, const GSet& y) {
  require_same_context(x, y, "product");
  const Group& g = x.group();
  const int n = x.size() * y.size();
  auto action = blank_action(g, n);
  for (int a : x.lattice()->subgroup(x.acting()).elements)
    for (int p = 0; p < x.size(); ++p)
      for (int q = 0; q < y.size(); ++q)
        action[static_cast<std::size_t>(a) * n + p * y.size() + q] = x.act(a, p) * y.size() + y.act(a, q);
  GSet set = GSet::unchecked(x.lattice(), x.acting(), n, std::move(action));
  std::vector<int> first(n), second(n);
  for (int i = 0; i < n; ++i) {
    first[i] = i / std::max(1, y.size());
    second[i] = i % std::max(1, y.size());
  }
  return {set, GMap::unchecked(set, x, std::move(first)), GMap::unchecked(set, y, std::move(second))};
}

Pullback pullback(const GMap& f, const GMap& g) {
  if (!f.target().same_as(g.target())) throw InputError("pullback: maps have different targets");
  const GSet& x = f.source();
  const GSet& y = g.source();
  std::vector<int> id(static_cast<std::size_t>(x.size()) * y.size(), -1);
  std::vector<int> first, second;
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < y.size(); ++q)
      if (f(p) == g(q)) {
        id[static_cast<std::size_t>(p) * y.size() + q] = static_cast<int>(first.size());
        first.push_back(p);
        second.push_back(q);
      }
  const int n = static_cast<int>(first.size());
  auto action = blank_action(x.group(), n);
  for (int a : x.lattice()->subgroup(x.acting()).elements)
    for (int i = 0; i < n; ++i)
      action[static_cast<std::size_t>(a) * n + i] =
          id[static_cast<std::size_t>(x.act(a, first[i])) * y.size() + y.act(a, second[i])];
  GSet set = GSet::unchecked(x.lattice(), x.acting(), n, std::move(action));
  return {set, GMap::unchecked(set, x, std::move(first)), GMap::unchecked(set, y, std::move(second))};
}

GMap pullback_pairing(const Pullback& pb, const GMap& a, const GMap& b) {
  if (!a.source().same_as(b.source())) throw InputError("pullback_pairing: different sources");
  if (!a.target().same_as(pb.first.target()) || !b.target().same_as(pb.second.target()))
    throw InputError("pullback_pairing: legs do not match the pullback");
  std::map<std::pair<int, int>, int> lookup;
  for (int i = 0; i < pb.set.size(); ++i) lookup[{pb.first(i), pb.second(i)}] = i;
  std::vector<int> pts(a.source().size());
  for (int p = 0; p < a.source().size(); ++p) {
    auto it = lookup.find({a(p), b(p)});
    if (it == lookup.end()) throw InputError("pullback_pairing: square does not commute");
    pts[p] = it->second;
  }
  return GMap::unchecked(a.source(), pb.set, std::move(pts));
}

GSet subset(const GSet& x, const std::vector<int>& points, int acting) {
  const auto& lat = x.lattice();
  if (!lat->leq(acting, x.acting())) throw InputError("subset: acting group not contained");
  std::vector<int> sorted(points);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(x.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i);
  const int n = static_cast<int>(sorted.size());
  auto action = blank_action(x.group(), n);
  for (int a : lat->subgroup(acting).elements)
    for (int i = 0; i < n; ++i) {
      const int v = local[x.act(a, sorted[i])];
      if (v < 0) throw InputError("subset: points are not closed under the action");
      action[static_cast<std::size_t>(a) * n + i] = v;
    }
  return GSet::unchecked(lat, acting, n, std::move(action));
}

GSet restrict(int subgroup, const GSet& x) {
  std::vector<int> all(x.size());
  std::iota(all.begin(), all.end(), 0);
  return subset(x, all, subgroup);
}

GSet induce(int j, const GSet& x) {
  const auto& lat = x.lattice();
  const int h = x.acting();
  if (!lat->leq(h, j)) throw InputError("induce: acting group is not contained in target group");
  const Group& g = lat->group();
  const auto& H = lat->subgroup(h);
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int a : lat->subgroup(j).elements) {
    if (coset_of[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int b : H.elements) coset_of[g.mul(a, b)] = c;
  }
  const int m = static_cast<int>(reps.size());
  const int n = m * x.size();
  auto action = blank_action(g, n);
  for (int a : lat->subgroup(j).elements)
    for (int c = 0; c < m; ++c) {
      const int target = coset_of[g.mul(a, reps[c])];
      const int inner = g.mul(g.inv(reps[target]), g.mul(a, reps[c]));
      for (int p = 0; p < x.size(); ++p)
        action[static_cast<std::size_t>(a) * n + c * x.size() + p] = target * x.size() + x.act(inner, p);
    }
  return GSet::unchecked(lat, j, n, std::move(action));
}

namespace {

/// Right cosets K r of K in H with least-element representatives, and for each
/// (rep i, h in H) the decomposition r_i h = k r_j.
struct RightCosets {
  std::vector<int> reps;
  std::vector<int> target;  // [i * |G| + h] -> j
  std::vector<int> factor;  // [i * |G| + h] -> k
};

RightCosets right_cosets(const Lattice& lat, int k, int h) {
  const Group& g = lat.group();
  RightCosets rc;
  std::vector<int> coset_of(g.order(), -1);
  for (int a : lat.subgroup(h).elements) {
    if (coset_of[a] >= 0) continue;
    const int c = static_cast<int>(rc.reps.size());
    rc.reps.push_back(a);
    for (int b : lat.subgroup(k).elements) coset_of[g.mul(b, a)] = c;
  }
  const std::size_t m = rc.reps.size();
  rc.target.assign(m * g.order(), -1);
  rc.factor.assign(m * g.order(), -1);
  for (std::size_t i = 0; i < m; ++i)
    for (int a : lat.subgroup(h).elements) {
      const int prod = g.mul(rc.reps[i], a);
      const int j = coset_of[prod];
      rc.target[i * g.order() + a] = j;
      rc.factor[i * g.order() + a] = g.mul(prod, g.inv(rc.reps[j]));
    }
  return rc;
}

long long checked_power(long long base, int exp, long long cap, const char* what) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) check_points(cap + 1, cap, what);
    r *= base;
  }
  check_points(r, cap, what);
  return r;
}

}  // namespace

GSet coinduce(int h, const GSet& t, long long point_cap) {
  const auto& lat = t.lattice();
  const int k = t.acting();
  if (!lat->leq(k, h)) throw InputError("coinduce: K is not contained in H");
  const Group& g = lat->group();
  const auto rc = right_cosets(*lat, k, h);
  const int m = static_cast<int>(rc.reps.size());
  const long long n = checked_power(t.size(), m, point_cap, "coinduce");
  auto action = blank_action(g, n);
  std::vector<int> digits(m), out(m);
  for (long long p = 0; p < n; ++p) {
    long long rest = p;
    for (int i = 0; i < m; ++i) {
      digits[i] = static_cast<int>(rest % t.size());
      rest /= t.size();
    }
    for (int a : lat->subgroup(h).elements) {
      long long q = 0, scale = 1;
      for (int i = 0; i < m; ++i) {
        const std::size_t at = static_cast<std::size_t>(i) * g.order() + a;
        q += t.act(rc.factor[at], digits[rc.target[at]]) * scale;
        scale *= t.size();
      }
      action[static_cast<std::size_t>(a) * n + p] = static_cast<int>(q);
    }
  }
  return GSet::unchecked(lat, h, static_cast<int>(n), std::move(action));
}

GMap coinduce_map(int h, const GMap& f, long long point_cap) {
  GSet src = coinduce(h, f.source(), point_cap);
  GSet tgt = coinduce(h, f.target(), point_cap);
  const int m = f.source().lattice()->index(f.source().acting(), h);
  const int xs = f.source().size(), ys = f.target().size();
  std::vector<int> pts(src.size());
  for (int p = 0; p < src.size(); ++p) {
    long long rest = p, q = 0, scale = 1;
    for (int i = 0; i < m; ++i) {
      q += f(static_cast<int>(rest % xs)) * scale;
      rest /= xs;
      scale *= ys;
    }
    pts[p] = static_cast<int>(q);
  }
  return GMap::unchecked(std::move(src), std::move(tgt), std::move(pts));
}

GMap orbit_quotient(const LatticePtr& lattice, int acting, int k, int h) {
  if (!lattice->leq(k, h)) throw InputError("orbit_quotient: K is not contained in H");
  GSet src = coset_space(lattice, acting, k);
  GSet tgt = coset_space(lattice, acting, h);
  const auto k_coset = left_coset_index(*lattice, acting, k, nullptr);
  const auto h_coset = left_coset_index(*lattice, acting, h, nullptr);
  std::vector<int> pts(src.size());
  for (int a : lattice->subgroup(acting).elements) pts[k_coset[a]] = h_coset[a];
  return GMap(std::move(src), std::move(tgt), std::move(pts));
}

GMap orbit_map_to(const GSet& y, int point, int m) {
  const auto& lat = y.lattice();
  if (!lat->leq(m, y.stabilizer(point))) throw InputError("orbit_map_to: M does not fix the point");
  GSet src = coset_space(lat, y.acting(), m);
  const auto coset_of = left_coset_index(*lat, y.acting(), m, nullptr);
  std::vector<int> pts(src.size());
  for (int a : lat->subgroup(y.acting()).elements) pts[coset_of[a]] = y.act(a, point);
  return GMap::unchecked(std::move(src), y, std::move(pts));
}

DependentProduct dependent_product_data(const GMap& g, const GMap& h, long long point_cap) {
  if (!h.target().same_as(g.source())) throw InputError("dependent_product: h does not land in the source of g");
  const GSet& s = g.source();
  const GSet& t = g.target();
  const GSet& a = h.source();
  std::vector<std::vector<int>> fibers(t.size()), pre(s.size());
  std::vector<int> pos_in_fiber(s.size()), pos_in_pre(a.size());
  for (int p = 0; p < s.size(); ++p) {
    pos_in_fiber[p] = static_cast<int>(fibers[g(p)].size());
    fibers[g(p)].push_back(p);
  }
  for (int p = 0; p < a.size(); ++p) {
    pos_in_pre[p] = static_cast<int>(pre[h(p)].size());
    pre[h(p)].push_back(p);
  }
  std::vector<long long> offset(t.size() + 1, 0);
  for (int q = 0; q < t.size(); ++q) {
    long long count = 1;
    for (int x : fibers[q]) {
      count *= static_cast<long long>(pre[x].size());
      if (count > point_cap) break;
    }
    offset[q + 1] = offset[q] + count;
    check_points(offset[q + 1], point_cap, "dependent_product");
  }
  const int n = static_cast<int>(offset[t.size()]);
  DependentProduct out{GMap::unchecked(GSet::empty(s.lattice(), s.acting()), t, {}), fibers, {}};
  out.sections.resize(n);
  std::vector<int> base(n), digits;
  for (int q = 0; q < t.size(); ++q)
    for (long long id = offset[q]; id < offset[q + 1]; ++id) {
      base[id] = q;
      long long rest = id - offset[q];
      auto& sec = out.sections[id];
      sec.resize(fibers[q].size());
      for (std::size_t i = 0; i < fibers[q].size(); ++i) {
        const auto& choices = pre[fibers[q][i]];
        sec[i] = choices[rest % static_cast<long long>(choices.size())];
        rest /= static_cast<long long>(choices.size());
      }
    }
  auto encode = [&](int q, const std::vector<int>& digit_at) {
    long long id = 0, scale = 1;
    for (std::size_t i = 0; i < fibers[q].size(); ++i) {
      id += digit_at[i] * scale;
      scale *= static_cast<long long>(pre[fibers[q][i]].size());
    }
    return static_cast<int>(offset[q] + id);
  };
  auto action = blank_action(s.group(), n);
  for (int e : s.lattice()->subgroup(s.acting()).elements)
    for (int id = 0; id < n; ++id) {
      const int q = base[id];
      const int q2 = t.act(e, q);
      digits.assign(fibers[q2].size(), 0);
      for (std::size_t i = 0; i < fibers[q].size(); ++i) {
        const int moved = a.act(e, out.sections[id][i]);
        digits[pos_in_fiber[h(moved)]] = pos_in_pre[moved];
      }
      action[static_cast<std::size_t>(e) * n + id] = encode(q2, digits);
    }
  GSet pi = GSet::unchecked(s.lattice(), s.acting(), n, std::move(action));
  out.structure = GMap::unchecked(std::move(pi), t, std::move(base));
  return out;
}

GMap dependent_product(const GMap& g, const GMap& h, long long point_cap) {
  return dependent_product_data(g, h, point_cap).structure;
}

ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h, long long point_cap) {
  auto dp = dependent_product_data(g, h, point_cap);
  Pullback pb = pullback(g, dp.structure);
  std::vector<int> counit(pb.set.size());
  for (int i = 0; i < pb.set.size(); ++i) {
    const int tp = pb.first(i);
    const auto& fiber = dp.fibers[g(tp)];
    const auto pos = std::lower_bound(fiber.begin(), fiber.end(), tp) - fiber.begin();
    counit[i] = dp.sections[pb.second(i)][pos];
  }
  GMap f_prime = GMap::unchecked(pb.set, h.source(), std::move(counit));
  return {dp.structure, pb.second, std::move(f_prime), pb.first};
}

Fingerprint fingerprint(const GSet& x) {
  std::map<int, int> counts;
  for (int o = 0; o < x.orbit_count(); ++o)
    ++counts[x.lattice()->rep_under(x.acting(), x.orbit_stabilizer(o))];
  Fingerprint fp;
  for (auto [s, m] : counts) fp.push_back({s, m});
  return fp;
}

std::optional<GMap> iso_test(const GSet& x, const GSet& y) {
  if (x.lattice() != y.lattice() || x.acting() != y.acting()) return std::nullopt;
  if (x.size() != y.size() || fingerprint(x) != fingerprint(y)) return std::nullopt;
  const auto& lat = *x.lattice();
  const Group& g = lat.group();
  const auto& acting = lat.subgroup(x.acting()).elements;
  std::map<int, std::vector<int>> y_orbits;
  for (int o = 0; o < y.orbit_count(); ++o) y_orbits[lat.rep_under(x.acting(), y.orbit_stabilizer(o))].push_back(o);
  std::map<int, std::size_t> used;
  std::vector<int> pts(x.size(), -1);
  for (int o = 0; o < x.orbit_count(); ++o) {
    const int a = x.orbit_stabilizer(o);
    const int cls = lat.rep_under(x.acting(), a);
    const int yo = y_orbits[cls][used[cls]++];
    const int b = y.orbit_stabilizer(yo);
    int conj = -1;
    for (int e : acting)
      if (lat.conjugate(e, a) == b) {
        conj = e;
        break;
      }
    const int target = y.act(g.inv(conj), y.orbit_rep(yo));
    for (int e : acting) pts[x.act(e, x.orbit_rep(o))] = y.act(e, target);
  }
  GMap f = GMap::unchecked(x, y, std::move(pts));
  // Re-verify before handing out.
  GMap checked(f.source(), f.target(), f.points());
  if (!is_bijective(checked)) return std::nullopt;
  return checked;
}

bool isomorphic(const GSet& x, const GSet& y) { return iso_test(x, y).has_value(); }

std::vector<Fiber> map_fiber_data(const GMap& f) {
  const GSet& y = f.target();
  std::vector<std::vector<int>> over(y.size());
  for (int p = 0; p < f.source().size(); ++p) over[f(p)].push_back(p);
  std::vector<Fiber> out;
  for (int o = 0; o < y.orbit_count(); ++o) {
    const int rep = y.orbit_rep(o);
    const int stab = y.orbit_stabilizer(o);
    out.push_back({rep, stab, subset(f.source(), over[rep], stab), over[rep]});
  }
  return out;
}

}  // namespace bipoly
