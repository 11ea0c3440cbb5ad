#pragma once

#include <string>
#include <vector>

#include "bipoly/group.hpp"

namespace bipoly {

/// conjugator · N_{norm_from}^{norm_to}(x_symbol); conjugator is the least
/// element of the coset hK it comes from.
struct Factor {
  int conjugator = 0;
  int norm_from = 0;
  int norm_to = 0;
  int symbol = 0;  // 0-based
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// tr_L^H of a product of factors; one orbit of functions H/K -> {1..n} with
/// stabilizer L.
struct Term {
  int transfer_from = 0;
  std::vector<Factor> factors;
  int multiplicity = 1;
  std::vector<int> function;  // canonical orbit representative, indexed by coset
  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  LatticePtr lattice;
  int k = 0;
  int h = 0;
  int n = 0;
  std::vector<Term> terms;
};

/// N_K^H(x_1 + ... + x_n) as a sum of transfers of products of conjugated norms.
Formula expand_norm_sum(const LatticePtr& lattice, int k, int h, int n, long long function_cap = 1 << 20);

/// Default names: a, b, c, ...
std::vector<std::string> default_symbols(int n);

/// Renders in the usual notation: γ-powers for cyclic groups, (g<i>) element
/// labels otherwise; sub- and superscripts are dropped when H has no proper
/// nontrivial subgroup.
std::string pretty_print(const Formula& f, const std::vector<std::string>& symbols);
std::string pretty_print(const Formula& f);

struct CrossCheck {
  bool agrees = false;
  std::string detail;  // both datasets on mismatch
};

/// Compares the formula with the normal form of N_{H/K -> H/H} ∘ T_{fold}
/// computed by the bispan calculus: one U2 orbit per term, with matching
/// stabilizer classes and matching factor data on the U1 orbits above it.
CrossCheck cross_check_with_bispan(const LatticePtr& lattice, int k, int h, int n);

}  // namespace bipoly
