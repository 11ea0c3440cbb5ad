#pragma once

#include <bitset>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bipoly {

/// Hard upper bound on group order; the configurable cap may not exceed it.
inline constexpr int kMaxOrder = 128;
inline constexpr int kDefaultOrderCap = 64;

using ElementSet = std::bitset<kMaxOrder>;

/// Raised for malformed input: bad tables, bad indices, mismatched objects.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by its multiplication table on dense ids 0..order-1.
class Group {
 public:
  static Group from_cayley(std::string name, const std::vector<std::vector<int>>& table,
                           int order_cap = kDefaultOrderCap);

  /// Closure of a list of permutations of {0..d-1} under composition.
  /// Element 0 is the identity; remaining ids follow breadth-first discovery.
  /// Composition convention: (p*q)(x) = p(q(x)).
  static Group from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                                 int order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  const std::string& name() const { return name_; }
  bool is_abelian() const;
  int element_order(int a) const;

 private:
  Group() = default;
  void validate_and_fill(int order_cap);

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Built-in groups. Names: "C<n>", "C<n>xC<m>[x...]", "D<n>" (dihedral of
/// order 2n), "Q8", "S<n>" (n <= 4), "trivial".
///
/// Numbering: cyclic id k is gamma^k; products use mixed radix with the
/// first factor least significant; dihedral id k + n*e is r^k s^e.
Group builtin_group(const std::string& name, int order_cap = kDefaultOrderCap);

Group cyclic_group(int n, int order_cap = kDefaultOrderCap);
Group product_of_cyclics(const std::vector<int>& orders, int order_cap = kDefaultOrderCap);
Group dihedral_group(int n, int order_cap = kDefaultOrderCap);
Group quaternion_group();
Group symmetric_group(int n);

struct Subgroup {
  ElementSet members;
  std::vector<int> elements;  // sorted
  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return members.test(static_cast<std::size_t>(g)); }
};

/// All subgroups of a group with containment, intersections, conjugation and
/// conjugacy classes. Subgroups are indexed 0..count-1, ordered by size and
/// then lexicographically by sorted member list; 0 is the trivial subgroup and
/// count-1 the whole group.
class Lattice {
 public:
  explicit Lattice(Group group);

  const Group& group() const { return group_; }
  int count() const { return static_cast<int>(subgroups_.size()); }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  int trivial() const { return 0; }
  int top() const { return count() - 1; }

  /// Index of the subgroup with exactly these members; -1 if not a subgroup.
  int find(const ElementSet& members) const;
  /// Index of the subgroup generated by the given elements.
  int generated_by(const std::vector<int>& elements) const;

  bool leq(int k, int h) const { return contains_[idx(k, h)] != 0; }
  int intersect(int a, int b) const { return meet_[idx(a, b)]; }
  /// Index of g S g^-1.
  int conjugate(int g, int s) const { return conj_[static_cast<std::size_t>(g) * count() + s]; }

  /// G-conjugacy class id of a subgroup; classes are numbered by their least member.
  int class_of(int s) const { return class_of_[s]; }
  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_rep(int c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }
  bool subconjugate_classes(int c1, int c2) const { return subconj_[static_cast<std::size_t>(c1) * class_count() + c2] != 0; }

  /// Least index among the conjugates h S h^-1 with h in subgroup `acting`.
  int rep_under(int acting, int s) const;
  /// True iff some element of `acting` conjugates a into b.
  bool conjugate_under(int acting, int a, int b) const { return rep_under(acting, a) == rep_under(acting, b); }
  bool is_normal(int s) const { return class_members_[class_of_[s]].size() == 1; }

  /// Subgroups of `h`, in index order.
  std::vector<int> subgroups_of(int h) const;
  /// Index [h : k]; requires k <= h.
  int index(int k, int h) const { return subgroup(h).size() / subgroup(k).size(); }

  /// Moebius function of the interval [a, b] in the subgroup lattice (0 if a is not <= b).
  long long moebius(int a, int b) const { return moebius_[idx(a, b)]; }

  /// Display name: "e", the group's own name for the top, "C_k" for other cyclic
  /// subgroups, "H<i>" otherwise; ties are disambiguated with "#i".
  const std::string& label(int s) const { return labels_[s]; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * count() + b; }

  Group group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, int> lookup_;
  std::vector<char> contains_;
  std::vector<int> meet_;
  std::vector<int> conj_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> class_members_;
  std::vector<char> subconj_;
  std::vector<long long> moebius_;
  std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr make_lattice(Group g) { return std::make_shared<const Lattice>(std::move(g)); }

/// Closure of a set of elements under multiplication.
ElementSet closure(const Group& g, const ElementSet& seed);

}  // namespace bipoly
