#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "bipoly/bispan.hpp"

namespace bipoly {

/// Seeded generator of random sets, maps and bispans for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Up to max_orbits orbits of random type; with_fixed_point adds a trivial orbit.
  GSet gset(const LatticePtr& lattice, int acting, int max_orbits, bool with_fixed_point = false);
  /// A random equivariant map source -> target, if one exists.
  std::optional<GMap> map_to(const GSet& source, const GSet& target);
  /// A random map into target whose source orbits X satisfy stab(x) -> stab(f(x)) in o.
  GMap map_in(const TransferSystem& o, const GSet& target, int max_orbits);
  /// S <- U1 -> U2 -> T with g in O_m and h in O_a. S needs a fixed point.
  Bispan bispan_in(const SubgraphSpec& spec, const GSet& s, const GSet& t, int max_orbits);

 private:
  std::mt19937_64 rng_;
};

}  // namespace bipoly
