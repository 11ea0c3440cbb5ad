#include "bipoly/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace bipoly {

namespace {

std::vector<int> members_of(const ElementSet& s, int order) {
  std::vector<int> out;
  for (int i = 0; i < order; ++i)
    if (s.test(static_cast<std::size_t>(i))) out.push_back(i);
  return out;
}

void check_cap(int order, int order_cap) {
  if (order_cap > kMaxOrder)
    throw InputError("order cap " + std::to_string(order_cap) + " exceeds hard limit " +
                     std::to_string(kMaxOrder));
  if (order > order_cap)
    throw ResourceError("group order " + std::to_string(order) + " exceeds order cap " +
                        std::to_string(order_cap));
}

}  // namespace

Group Group::from_cayley(std::string name, const std::vector<std::vector<int>>& table,
                         int order_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("Cayley table is empty");
  check_cap(n, order_cap);
  Group g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw InputError("Cayley table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw InputError("Cayley table entry (" + std::to_string(a) + "," + std::to_string(b) +
                         ") out of range");
      g.table_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  g.validate_and_fill(order_cap);
  return g;
}

void Group::validate_and_fill(int order_cap) {
  const int n = order_;
  check_cap(n, order_cap);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("operation is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("operation has no two-sided identity");
  inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul(y, x) == identity_ && mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
    if (inverse_[x] < 0) throw InputError("element " + std::to_string(x) + " has no inverse");
  }
}

Group Group::from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                               int order_cap) {
  if (order_cap > kMaxOrder)
    throw InputError("order cap exceeds hard limit " + std::to_string(kMaxOrder));
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw InputError("generators act on sets of different sizes");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
        throw InputError("generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      auto next = compose(elems[i], s);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > order_cap)
          throw ResourceError("permutation group exceeds order cap " + std::to_string(order_cap));
      }
    }
  }
  Group g;
  g.name_ = std::move(name);
  g.order_ = static_cast<int>(elems.size());
  g.table_.resize(elems.size() * elems.size());
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      g.table_[static_cast<std::size_t>(a) * g.order_ + b] = index.at(compose(elems[a], elems[b]));
  g.validate_and_fill(order_cap);
  return g;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

Group cyclic_group(int n, int order_cap) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  check_cap(n, order_cap);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group::from_cayley("C" + std::to_string(n), t, order_cap);
}

Group product_of_cyclics(const std::vector<int>& orders, int order_cap) {
  if (orders.empty()) throw InputError("product of cyclics needs at least one factor");
  long long n = 1;
  std::string name;
  for (int k : orders) {
    if (k < 1) throw InputError("cyclic factor order must be positive");
    n *= k;
    if (n > kMaxOrder) throw ResourceError("product group exceeds hard order limit");
    name += (name.empty() ? "C" : "xC") + std::to_string(k);
  }
  check_cap(static_cast<int>(n), order_cap);
  auto digits = [&](int x) {
    std::vector<int> d;
    for (int k : orders) {
      d.push_back(x % k);
      x /= k;
    }
    return d;
  };
  const int order = static_cast<int>(n);
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      auto da = digits(a), db = digits(b);
      int v = 0, scale = 1;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        v += ((da[i] + db[i]) % orders[i]) * scale;
        scale *= orders[i];
      }
      t[a][b] = v;
    }
  return Group::from_cayley(name, t, order_cap);
}

Group dihedral_group(int n, int order_cap) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  check_cap(2 * n, order_cap);
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % n, s = x / n, b = y % n, u = y / n;
      const int rot = ((a + (s ? -b : b)) % n + n) % n;
      t[x][y] = rot + n * ((s + u) % 2);
    }
  return Group::from_cayley("D" + std::to_string(n), t, order_cap);
}

Group quaternion_group() {
  // id = unit + 4*sign, units 1, i, j, k.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int sign = (x / 4 + y / 4 + unit_sign[u][v]) % 2;
      t[x][y] = unit_mul[u][v] + 4 * sign;
    }
  return Group::from_cayley("Q8", t);
}

Group symmetric_group(int n) {
  if (n < 1 || n > 4) throw InputError("symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> cycle(n), swap(n);
    for (int i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
      swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  } else {
    gens = {{0}};
  }
  return Group::from_permutations("S" + std::to_string(n), gens);
}

Group builtin_group(const std::string& name, int order_cap) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw InputError("unknown group name '" + name + "'");
    return std::stoi(s);
  };
  if (name == "trivial" || name == "e") return cyclic_group(1, order_cap);
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && name[0] == 'S') {
    const int n = parse_int(name.substr(1));
    if (n < 1 || n > 4) throw InputError("symmetric group parameter out of range: " + name);
    return symmetric_group(n);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    const int n = parse_int(name.substr(1));
    if (n < 1 || 2 * n > order_cap) throw InputError("dihedral parameter out of range: " + name);
    return dihedral_group(n, order_cap);
  }
  if (name.size() >= 2 && name[0] == 'C') {
    std::vector<int> orders;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, 'x')) {
      if (part.size() < 2 || part[0] != 'C') throw InputError("unknown group name '" + name + "'");
      orders.push_back(parse_int(part.substr(1)));
    }
    long long n = 1;
    for (int k : orders) {
      if (k < 1) throw InputError("cyclic parameter out of range: " + name);
      n *= k;
      if (n > order_cap) throw InputError("group " + name + " exceeds order cap");
    }
    if (orders.size() == 1) return cyclic_group(orders[0], order_cap);
    return product_of_cyclics(orders, order_cap);
  }
  throw InputError("unknown group name '" + name + "'");
}

ElementSet closure(const Group& g, const ElementSet& seed) {
  ElementSet out;
  out.set(static_cast<std::size_t>(g.identity()));
  const auto gens = members_of(seed, g.order());
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!out.test(static_cast<std::size_t>(y))) {
        out.set(static_cast<std::size_t>(y));
        queue.push_back(y);
      }
    }
  }
  return out;
}

Lattice::Lattice(Group group) : group_(std::move(group)) {
  const int n = group_.order();
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, int> seen;
  auto add = [&](const ElementSet& s) {
    if (seen.emplace(s, static_cast<int>(found.size())).second) found.push_back(s);
  };
  std::vector<ElementSet> cyclics;
  for (int x = 0; x < n; ++x) {
    ElementSet single;
    single.set(static_cast<std::size_t>(x));
    auto c = closure(group_, single);
    if (!seen.count(c)) cyclics.push_back(c);
    add(c);
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& c : cyclics) add(closure(group_, found[i] | c));

  subgroups_.reserve(found.size());
  for (const auto& s : found) subgroups_.push_back({s, members_of(s, n)});
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  const int m = count();
  for (int i = 0; i < m; ++i) lookup_.emplace(subgroups_[i].members, i);

  contains_.assign(static_cast<std::size_t>(m) * m, 0);
  meet_.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto& A = subgroups_[a].members;
      const auto& B = subgroups_[b].members;
      contains_[idx(a, b)] = (A & ~B).none() ? 1 : 0;
      meet_[idx(a, b)] = lookup_.at(A & B);
    }

  conj_.assign(static_cast<std::size_t>(n) * m, 0);
  for (int g = 0; g < n; ++g)
    for (int s = 0; s < m; ++s) {
      ElementSet c;
      for (int x : subgroups_[s].elements) c.set(static_cast<std::size_t>(group_.conj(g, x)));
      conj_[static_cast<std::size_t>(g) * m + s] = lookup_.at(c);
    }

  class_of_.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (class_of_[s] >= 0) continue;
    const int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(s);
    class_members_.emplace_back();
    for (int g = 0; g < n; ++g) {
      const int t = conjugate(g, s);
      if (class_of_[t] < 0) {
        class_of_[t] = c;
        class_members_[c].push_back(t);
      }
    }
    std::sort(class_members_[c].begin(), class_members_[c].end());
  }
  const int nc = class_count();
  subconj_.assign(static_cast<std::size_t>(nc) * nc, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (leq(a, b)) subconj_[static_cast<std::size_t>(class_of_[a]) * nc + class_of_[b]] = 1;

  moebius_.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    moebius_[idx(a, a)] = 1;
    for (int b = a + 1; b < m; ++b) {
      if (!leq(a, b)) continue;
      long long sum = 0;
      for (int c = a; c < b; ++c)
        if (leq(a, c) && leq(c, b)) sum += moebius_[idx(a, c)];
      moebius_[idx(a, b)] = -sum;
    }
  }

  labels_.resize(m);
  for (int s = 0; s < m; ++s) {
    const auto& sub = subgroups_[s];
    bool cyclic = false;
    for (int x : sub.elements)
      if (group_.element_order(x) == sub.size()) cyclic = true;
    if (sub.size() == 1)
      labels_[s] = "e";
    else if (cyclic)
      labels_[s] = "C_" + std::to_string(sub.size());
    else if (s == m - 1)
      labels_[s] = group_.name();
    else
      labels_[s] = "H" + std::to_string(s);
  }
  std::map<std::string, int> uses;
  for (const auto& l : labels_) ++uses[l];
  for (int s = 0; s < m; ++s)
    if (uses[labels_[s]] > 1) labels_[s] += "#" + std::to_string(s);
}

int Lattice::find(const ElementSet& members) const {
  auto it = lookup_.find(members);
  return it == lookup_.end() ? -1 : it->second;
}

int Lattice::generated_by(const std::vector<int>& elements) const {
  ElementSet s;
  for (int x : elements) {
    if (x < 0 || x >= group_.order()) throw InputError("element id out of range");
    s.set(static_cast<std::size_t>(x));
  }
  return lookup_.at(closure(group_, s));
}

int Lattice::rep_under(int acting, int s) const {
  int best = s;
  for (int h : subgroups_[acting].elements) best = std::min(best, conjugate(h, s));
  return best;
}

std::vector<int> Lattice::subgroups_of(int h) const {
  std::vector<int> out;
  for (int k = 0; k < count(); ++k)
    if (leq(k, h)) out.push_back(k);
  return out;
}

}  // namespace bipoly
