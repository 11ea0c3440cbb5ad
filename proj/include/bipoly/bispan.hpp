#pragma once

#include <vector>

#include "bipoly/compat.hpp"

namespace bipoly {

/// A polynomial S <-f- U1 -g-> U2 -h-> T, stored in normal form T_h ∘ N_g ∘ R_f.
class Bispan {
 public:
  Bispan(GMap f, GMap g, GMap h);

  const GMap& f() const { return f_; }
  const GMap& g() const { return g_; }
  const GMap& h() const { return h_; }
  const GSet& source() const { return f_.target(); }
  const GSet& target() const { return h_.target(); }
  const GSet& u1() const { return f_.source(); }
  const GSet& u2() const { return h_.source(); }

 private:
  GMap f_, g_, h_;
};

/// R_f : Y -> X for f : X -> Y.
Bispan gen_R(const GMap& f);
/// N_g : X -> Y for g : X -> Y.
Bispan gen_N(const GMap& g);
/// T_h : X -> Y for h : X -> Y.
Bispan gen_T(const GMap& h);
Bispan identity(const GSet& s);

/// q ∘ p. If p's target is only isomorphic to q's source, the canonical
/// isomorphism from iso_test is inserted.
Bispan compose(const Bispan& q, const Bispan& p, long long point_cap = kDefaultPointCap);

struct SubgraphSpec {
  TransferSystem o_a;
  TransferSystem o_m;
  /// Throws InputError unless (o_a, o_m) is compatible.
  static SubgraphSpec checked(TransferSystem o_a, TransferSystem o_m);
  static SubgraphSpec unchecked(TransferSystem o_a, TransferSystem o_m);
};

/// g in O_m and h in O_a; f is unrestricted.
bool in_subgraph(const Bispan& p, const SubgraphSpec& spec);

Bispan zero(const GSet& s, const GSet& t);
/// Multiplicative unit S <- ∅ -> T = T.
Bispan one(const GSet& s, const GSet& t);
Bispan add(const Bispan& p, const Bispan& q);
Bispan mul(const Bispan& p, const Bispan& q);

/// X -> S ⨿ T from P : X -> S and Q : X -> T.
Bispan pairing(const Bispan& p, const Bispan& q);
struct Projections {
  Bispan to_s;
  Bispan to_t;
};
Projections projections(const GSet& s, const GSet& t);

/// Iso-class invariant of the whole diagram: sorted per-orbit descriptors of U2
/// (stabilizer class, target orbit, and the descriptors of U1 orbits over it).
using BispanFingerprint = std::vector<std::vector<int>>;
BispanFingerprint fingerprint(const Bispan& p);

/// Equality of iso classes: endpoints must coincide exactly; the middle sets may
/// differ by a pair of isomorphisms commuting with all legs.
bool bispan_eq(const Bispan& p, const Bispan& q);

/// Morphisms realizing an incompatibility witness over G: T along
/// G x_K T -> G/K (in O_a) and N along G/K -> G/H (in O_m). Their composite
/// has h-leg G x_H Map^K(H, T) -> G/H, which leaves O_a.
struct EscapePair {
  Bispan transfer;
  Bispan norm;
};
EscapePair escape_pair(const CompatWitness& w);

}  // namespace bipoly
