#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipoly/compat.hpp"

namespace bipoly {

/// For each subgroup H, the subgroups K <= H that occur as point stabilizers
/// in the universe restricted to H.
class StabilizerDatum {
 public:
  /// Throws InputError naming the violated condition.
  StabilizerDatum(LatticePtr lattice, std::vector<std::vector<int>> stabilizers);

  const LatticePtr& lattice() const { return lattice_; }
  /// Sorted subgroup indices.
  const std::vector<int>& at(int h) const { return d_[h]; }
  bool contains(int h, int k) const;

  /// D(H) = {e, H}. For C_4 this is ∞(1+λ): the sign rotation has only e and C_2 fixing vectors.
  static StabilizerDatum free_or_trivial(LatticePtr lattice);

 private:
  LatticePtr lattice_;
  std::vector<std::vector<int>> d_;
};

/// First violated datum condition, if any.
std::optional<std::string> datum_violation(const Lattice& lattice, const std::vector<std::vector<int>>& d);

/// Sum of infinitely many copies of R[G/L] for L in Λ, plus trivial summands.
class PermUniverse {
 public:
  /// Λ must be nonempty and closed under conjugation.
  PermUniverse(LatticePtr lattice, std::vector<int> lambda);
  /// Λ as the union of the conjugacy classes of the given subgroups.
  static PermUniverse from_classes(LatticePtr lattice, const std::vector<int>& reps);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<int>& lambda() const { return lambda_; }

 private:
  LatticePtr lattice_;
  std::vector<int> lambda_;
};

/// Every nonempty conjugation-closed Λ, as unions of conjugacy classes.
std::vector<PermUniverse> all_perm_universes(const LatticePtr& lattice);

/// Edge (K, H) iff K ∈ D(H). Throws InputError if the result is not closed.
TransferSystem little_disks_system(const StabilizerDatum& d);

/// D(H): intersection closure of the setwise H-stabilizers of subsets of the
/// orbits G/L, L ∈ Λ, together with H.
StabilizerDatum stabilizers_of_perm_universe(const PermUniverse& u, long long subset_cap = 1LL << 22);

/// Edge (K, H) iff every orbit type of (H/K) × (H/M), for H/M among the orbit
/// types of U restricted to H, is again among them. Throws InputError if the
/// relation is not a transfer system.
TransferSystem linear_isometries_system(const PermUniverse& u);

struct DisksIsometries {
  TransferSystem disks;
  TransferSystem isometries;
  CompatReport report;
};
DisksIsometries disks_isometries_pair(const PermUniverse& u);

}  // namespace bipoly
