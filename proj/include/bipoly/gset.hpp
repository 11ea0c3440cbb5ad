#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bipoly/group.hpp"

namespace bipoly {

/// Largest point count any construction is allowed to materialize.
inline constexpr long long kDefaultPointCap = 1LL << 22;

/// A finite H-set, where H is a subgroup (the acting subgroup) of the lattice's
/// group. A G-set is the case H = top. The action is stored as a dense table;
/// entries for group elements outside H are -1.
class GSet {
 public:
  /// Validated constructor: checks the action axioms.
  GSet(LatticePtr lattice, int acting, int size, std::vector<int> action);

  /// Skips validation; for constructions that are correct by design.
  static GSet unchecked(LatticePtr lattice, int acting, int size, std::vector<int> action);

  static GSet empty(LatticePtr lattice, int acting);
  /// n points, each fixed by the acting subgroup.
  static GSet trivial(LatticePtr lattice, int acting, int n);

  const LatticePtr& lattice() const { return lattice_; }
  const Group& group() const { return lattice_->group(); }
  int acting() const { return acting_; }
  int size() const { return size_; }
  int act(int g, int p) const { return action_[static_cast<std::size_t>(g) * size_ + p]; }
  const std::vector<int>& action_table() const { return action_; }

  int orbit_count() const { return static_cast<int>(orbit_reps_.size()); }
  int orbit_of(int p) const { return orbit_of_[p]; }
  /// Least point of the orbit.
  int orbit_rep(int o) const { return orbit_reps_[o]; }
  /// Subgroup index of the stabilizer of the orbit representative.
  int orbit_stabilizer(int o) const { return orbit_stabs_[o]; }
  int orbit_size(int o) const;
  int stabilizer(int p) const;

  /// Exact equality of structure (same lattice object, acting subgroup, action).
  bool same_as(const GSet& other) const {
    return lattice_ == other.lattice_ && acting_ == other.acting_ && size_ == other.size_ &&
           action_ == other.action_;
  }

 private:
  friend class GMap;
  GSet() = default;
  void compute_orbits();

  LatticePtr lattice_;
  int acting_ = 0;
  int size_ = 0;
  std::vector<int> action_;
  std::vector<int> orbit_of_;
  std::vector<int> orbit_reps_;
  std::vector<int> orbit_stabs_;
};

/// Orbit type: canonical representative (least subgroup index) of the
/// acting-subgroup conjugacy class of a stabilizer, with multiplicity.
struct OrbitType {
  int stabilizer_class = 0;
  int multiplicity = 0;
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
  friend auto operator<=>(const OrbitType&, const OrbitType&) = default;
};

using Fingerprint = std::vector<OrbitType>;

/// Equivariant map between sets with the same acting subgroup.
class GMap {
 public:
  GMap(GSet source, GSet target, std::vector<int> points);
  static GMap unchecked(GSet source, GSet target, std::vector<int> points);

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  const std::vector<int>& points() const { return points_; }
  int operator()(int p) const { return points_[p]; }

 private:
  GMap() = default;
  GSet source_;
  GSet target_;
  std::vector<int> points_;
};

/// H/K with cosets numbered by increasing least element; H acts on the left.
GSet coset_space(const LatticePtr& lattice, int acting, int k);
/// Disjoint union of coset spaces acting/K_i in the given order.
GSet gset_from_orbit_types(const LatticePtr& lattice, int acting, const std::vector<int>& stabilizers);

GMap identity_map(const GSet& x);
/// second after first.
GMap compose(const GMap& second, const GMap& first);
bool is_bijective(const GMap& f);
/// The unique map to a one-point set.
GMap to_point(const GSet& x);
GMap from_empty(const GSet& y);

struct Coproduct {
  GSet set;
  GMap left;
  GMap right;
};
Coproduct coproduct(const GSet& x, const GSet& y);
/// f ⨿ g : X ⨿ X' -> Y ⨿ Y'.
GMap coproduct_map(const GMap& f, const GMap& g);
/// Codiagonal from `copies` copies of x onto x.
GMap fold_map(const GSet& x, int copies = 2);
/// [f, g] : X ⨿ X' -> Y.
GMap copair(const GMap& f, const GMap& g);

struct Product {
  GSet set;
  GMap first;
  GMap second;
};
Product product(const GSet& x, const GSet& y);

struct Pullback {
  GSet set;
  GMap first;   // to f.source()
  GMap second;  // to g.source()
};
/// {(x, y) : f(x) = g(y)} with points ordered lexicographically by (x, y).
Pullback pullback(const GMap& f, const GMap& g);
/// Induced map into a pullback: (a, b) with f∘a = g∘b.
GMap pullback_pairing(const Pullback& pb, const GMap& a, const GMap& b);

GSet restrict(int subgroup, const GSet& x);
/// J ×_H X for H = x.acting() <= j.
GSet induce(int j, const GSet& x);
/// Map^K(H, T) for K = t.acting() <= h: K-equivariant functions H -> T with
/// (h'·f)(x) = f(x h').
GSet coinduce(int h, const GSet& t, long long point_cap = kDefaultPointCap);
/// Post-composition Map^K(H, X) -> Map^K(H, Y).
GMap coinduce_map(int h, const GMap& f, long long point_cap = kDefaultPointCap);
/// The map acting/M -> Y sending the coset of the identity to `point`;
/// requires M <= stab(point).
GMap orbit_map_to(const GSet& y, int point, int m);
/// G/K -> G/H, gK -> gH, for K <= H, over the given acting subgroup.
GMap orbit_quotient(const LatticePtr& lattice, int acting, int k, int h);

/// Dependent product with the section data that realizes it.
struct DependentProduct {
  GMap structure;                          // Π_g(A) -> T
  std::vector<std::vector<int>> fibers;    // fibers[t] = sorted g^{-1}(t)
  std::vector<std::vector<int>> sections;  // sections[p][i] = image of fibers[t][i]
};
/// Π_g(h) for g : S -> T, h : A -> S, by explicit section enumeration. Over a
/// point with empty fiber the only section is the empty one.
DependentProduct dependent_product_data(const GMap& g, const GMap& h,
                                        long long point_cap = kDefaultPointCap);
GMap dependent_product(const GMap& g, const GMap& h, long long point_cap = kDefaultPointCap);

/// For g : T -> U and h : S -> T: the diagram
///   T <-h- S <-f'- T ×_U Π_g(S) -g'-> Π_g(S) -h'-> U
/// with `to_t` the projection T ×_U Π_g(S) -> T, so h∘f' = to_t.
struct ExponentialDiagram {
  GMap h_prime;
  GMap g_prime;
  GMap f_prime;
  GMap to_t;
};
ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h,
                                       long long point_cap = kDefaultPointCap);

Fingerprint fingerprint(const GSet& x);
/// An equivariant bijection x -> y when one exists.
std::optional<GMap> iso_test(const GSet& x, const GSet& y);
bool isomorphic(const GSet& x, const GSet& y);

/// Fiber of f over a target-orbit representative, as a set for that
/// representative's stabilizer.
struct Fiber {
  int target_point = 0;
  int stabilizer = 0;
  GSet fiber;
  std::vector<int> source_points;  // fiber point i is source point source_points[i]
};
std::vector<Fiber> map_fiber_data(const GMap& f);

/// Sub-H-set on a union of orbits, renumbered in increasing point order.
GSet subset(const GSet& x, const std::vector<int>& points, int acting);

}  // namespace bipoly
