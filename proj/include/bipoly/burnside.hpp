#pragma once

#include <vector>

#include "bipoly/transfer.hpp"

namespace bipoly {

using IntVector = std::vector<long long>;
/// m[i][j]: coefficient of target basis element i in the image of source basis element j.
using IntMatrix = std::vector<std::vector<long long>>;

/// A_O(G/H): free abelian group on the H-orbit classes H/K with K -> H in O.
struct BurnsideLevel {
  TransferSystem o;
  int h = 0;
  std::vector<int> basis;  // least-index H-conjugacy representatives, increasing
  int rank() const { return static_cast<int>(basis.size()); }
  /// Position of the class of k in the basis, or -1.
  int position(int k) const;
};

BurnsideLevel level(const TransferSystem& o, int h);

/// Coefficients of an H-set; throws InputError if some orbit is not admissible.
IntVector decompose(const BurnsideLevel& lvl, const GSet& x);
/// The basis vector for H/K.
IntVector basis_vector(const BurnsideLevel& lvl, int k);

IntVector multiply(const BurnsideLevel& lvl, const IntVector& v, const IntVector& w);
/// Structure constants: table[i][j] = basis_i · basis_j.
std::vector<std::vector<IntVector>> multiplication_table(const BurnsideLevel& lvl);

/// level(H) -> level(K) for K <= H.
IntMatrix restriction(const TransferSystem& o, int k, int h);
/// level(K) -> level(H); throws InputError unless K -> H is in O.
IntMatrix transfer(const TransferSystem& o, int k, int h);
IntVector apply_matrix(const IntMatrix& m, const IntVector& v);

/// tr(res(a)·b) = a·tr(b) for all basis a at H, b at K, on an O-edge (K, H).
bool frobenius_holds(const TransferSystem& o, int k, int h);
/// res_L tr_K^H = Σ over L\H/K of tr ∘ c_x ∘ res, on an O-edge (K, H) and L <= H.
/// The right side is assembled from explicit double cosets of group elements.
bool double_coset_holds(const TransferSystem& o, int k, int h, int l);

}  // namespace bipoly
