#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bipoly/gset.hpp"

namespace bipoly {

/// A transfer system on the subgroup lattice: the relation "K -> H admissible"
/// (H/K is an admissible H-set). Edges are stored on all subgroup pairs and are
/// always reflexive, conjugation-closed, restriction-closed and transitive.
class TransferSystem {
 public:
  /// Least transfer system containing the seeds.
  static TransferSystem from_edges(LatticePtr lattice, const std::vector<std::pair<int, int>>& seeds);
  /// Accepts only an already closed edge set; throws InputError naming the
  /// first violated rule otherwise.
  static TransferSystem from_closed_edges(LatticePtr lattice, const std::vector<std::pair<int, int>>& edges);
  static TransferSystem trivial(LatticePtr lattice);
  static TransferSystem complete(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  bool has(int k, int h) const { return edges_[idx(k, h)] != 0; }
  /// All edges (K, H), K != H, in lexicographic order.
  std::vector<std::pair<int, int>> nontrivial_edges() const;
  /// One edge per conjugacy class of nontrivial edges (least member).
  std::vector<std::pair<int, int>> edge_class_reps() const;
  int edge_count() const;
  /// Canonical encoding; equal systems have equal encodings.
  const std::vector<char>& encoding() const { return edges_; }

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.lattice_ == b.lattice_ && a.edges_ == b.edges_;
  }

 private:
  TransferSystem(LatticePtr lattice, std::vector<char> edges)
      : lattice_(std::move(lattice)), edges_(std::move(edges)) {}
  std::size_t idx(int k, int h) const { return static_cast<std::size_t>(k) * lattice_->count() + h; }
  void close();

  LatticePtr lattice_;
  std::vector<char> edges_;
};

/// Name of the first closure rule the raw edge relation violates, if any.
std::optional<std::string> closure_violation(const Lattice& lattice, const std::vector<char>& edges);

struct AdmissibleSetQuery {
  bool admissible = true;
  std::optional<OrbitType> offending_orbit;
};

/// An H-set (acting subgroup H) is admissible iff each orbit stabilizer has an edge to H.
AdmissibleSetQuery is_admissible_set(const TransferSystem& o, const GSet& t);
/// True iff every fiber over a target-orbit representative is admissible for its stabilizer.
bool map_in_indexing_category(const TransferSystem& o, const GMap& f);

inline constexpr std::size_t kDefaultSystemCap = 200000;

/// All transfer systems on the lattice, sorted by encoding.
std::vector<TransferSystem> enumerate_transfer_systems(const LatticePtr& lattice,
                                                       std::size_t cap = kDefaultSystemCap);

TransferSystem meet(const TransferSystem& a, const TransferSystem& b);
TransferSystem join(const TransferSystem& a, const TransferSystem& b);
/// Edge containment a ⊆ b.
bool leq(const TransferSystem& a, const TransferSystem& b);

}  // namespace bipoly
