#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipoly/transfer.hpp"

namespace bipoly {

/// A concrete failure: T is an O_a-admissible K-set, (K, H) is an O_m edge, and
/// Map^K(H, T) has an orbit H/L with L -> H missing from O_a.
struct CompatWitness {
  int k = 0;
  int h = 0;
  std::vector<int> t_orbits;  // stabilizers of the K-orbits of T, canonical order
  GSet t;
  OrbitType offending;
};

struct CompatReport {
  bool compatible = true;
  std::optional<CompatWitness> witness;
  long long checked_pairs = 0;  // (edge class, test set) combinations examined
};

/// Subgroups L <= H occurring as point stabilizers of Map^K(H, T), where T is
/// the K-set with `multiplicity[i]` copies of K/types[i]. Computed from fixed
/// point counts and Moebius inversion over the subgroup lattice; nothing is
/// materialized. The second component counts H-orbits per occurring L-class.
std::map<int, long long> coinduced_orbit_types(const Lattice& lattice, int k, int h,
                                               const std::vector<std::pair<int, int>>& t_orbits);

/// Least-index representatives of the K-conjugacy classes of M <= K with M -> K in o.
std::vector<int> admissible_orbit_types(const TransferSystem& o, int k);

/// Decides whether o_m distributes over o_a: for every O_m edge (K, H) and every
/// O_a-admissible K-set T with at most [H:K] orbits, Map^K(H, T) is O_a-admissible.
CompatReport is_compatible(const TransferSystem& o_a, const TransferSystem& o_m);

/// Necessary condition: for each O_m edge (K, H) and K <= L <= H, L -> H is in O_a.
bool subconjugacy_filter(const TransferSystem& o_a, const TransferSystem& o_m);

/// Least O_a' containing o_a with (O_a', o_m) compatible.
TransferSystem additive_hull(const TransferSystem& o_a, const TransferSystem& o_m);
/// Join of all single-edge-generated systems compatible with o_a.
TransferSystem multiplicative_hull(const TransferSystem& o_a);

struct PairCensus {
  std::string group;
  long long n_systems = 0;
  long long total_pairs = 0;
  long long comparable_pairs = 0;
  long long filter_pass = 0;
  long long compatible_pairs = 0;
  /// Indices (additive, multiplicative) into `systems` of comparable but incompatible pairs.
  std::vector<std::pair<int, int>> comparable_incompatible;
  /// Indices of pairs that are compatible but violate a property every
  /// compatible pair must have (O_m <= O_a, filter pass); empty unless broken.
  std::vector<std::pair<int, int>> anomalies;
  std::vector<TransferSystem> systems;
};

PairCensus census(const LatticePtr& lattice);

/// Independent check of compatibility: enumerates every K-equivariant function
/// H -> T explicitly for every multiset T of admissible K-orbit types with at
/// most `orbit_budget` orbits, over every O_m edge. Results per (K, H, T) are
/// memoized across calls; an oracle instance is not safe for concurrent use.
class BruteForceOracle {
 public:
  bool compatible(const TransferSystem& o_a, const TransferSystem& o_m, int orbit_budget);

 private:
  const std::vector<int>& stabilizers(const Lattice& lattice, int k, int h, const std::vector<int>& t_orbits);
  std::map<std::tuple<const Lattice*, int, int, std::vector<int>>, std::vector<int>> cache_;
};

bool brute_force_compatible(const TransferSystem& o_a, const TransferSystem& o_m, int orbit_budget);

struct CoinductionProbe {
  bool preserves = true;
  long long maps_checked = 0;
  std::optional<std::string> finding;
};

/// For every O_m edge (K, H) and every map f of K-sets in O_a from the bounded
/// family (target at most two orbits, each fiber at most two admissible orbits,
/// source at most [H:K] * (number of K-orbit types) points), checks that
/// coinduce(K <= H, f) is again in O_a. Throws InputError on an incompatible pair.
CoinductionProbe check_coinduction_preserves(const TransferSystem& o_a, const TransferSystem& o_m);

}  // namespace bipoly
