#include "bipoly/burnside.hpp"

#include <algorithm>

namespace bipoly {

int BurnsideLevel::position(int k) const {
  const int rep = o.lattice()->rep_under(h, k);
  auto it = std::find(basis.begin(), basis.end(), rep);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

BurnsideLevel level(const TransferSystem& o, int h) {
  const Lattice& lat = *o.lattice();
  if (h < 0 || h >= lat.count()) throw InputError("level: bad subgroup index");
  BurnsideLevel out{o, h, {}};
  for (int k : lat.subgroups_of(h))
    if (lat.rep_under(h, k) == k && o.has(k, h)) out.basis.push_back(k);
  return out;
}

IntVector decompose(const BurnsideLevel& lvl, const GSet& x) {
  if (x.lattice() != lvl.o.lattice() || x.acting() != lvl.h) throw InputError("decompose: set lives at another level");
  IntVector v(lvl.rank(), 0);
  for (const auto& t : fingerprint(x)) {
    const int pos = lvl.position(t.stabilizer_class);
    if (pos < 0) throw InputError("decompose: orbit " + lvl.o.lattice()->label(t.stabilizer_class) + " is not admissible");
    v[pos] += t.multiplicity;
  }
  return v;
}

IntVector basis_vector(const BurnsideLevel& lvl, int k) {
  const int pos = lvl.position(k);
  if (pos < 0) throw InputError("basis_vector: not an admissible orbit");
  IntVector v(lvl.rank(), 0);
  v[pos] = 1;
  return v;
}

namespace {

void require_rank(const BurnsideLevel& lvl, const IntVector& v) {
  if (static_cast<int>(v.size()) != lvl.rank()) throw InputError("vector does not match the level");
}

}  // namespace

std::vector<std::vector<IntVector>> multiplication_table(const BurnsideLevel& lvl) {
  std::vector<std::vector<IntVector>> out(lvl.rank(), std::vector<IntVector>(lvl.rank()));
  for (int i = 0; i < lvl.rank(); ++i)
    for (int j = i; j < lvl.rank(); ++j) {
      const auto& lat = lvl.o.lattice();
      Product p = product(coset_space(lat, lvl.h, lvl.basis[i]), coset_space(lat, lvl.h, lvl.basis[j]));
      out[i][j] = out[j][i] = decompose(lvl, p.set);
    }
  return out;
}

IntVector multiply(const BurnsideLevel& lvl, const IntVector& v, const IntVector& w) {
  require_rank(lvl, v);
  require_rank(lvl, w);
  const auto table = multiplication_table(lvl);
  IntVector out(lvl.rank(), 0);
  for (int i = 0; i < lvl.rank(); ++i)
    for (int j = 0; j < lvl.rank(); ++j)
      if (v[i] && w[j])
        for (int r = 0; r < lvl.rank(); ++r) out[r] += v[i] * w[j] * table[i][j][r];
  return out;
}

IntMatrix restriction(const TransferSystem& o, int k, int h) {
  const auto& lat = o.lattice();
  if (!lat->leq(k, h)) throw InputError("restriction: " + lat->label(k) + " is not contained in " + lat->label(h));
  const auto top = level(o, h);
  const auto bottom = level(o, k);
  IntMatrix m(bottom.rank(), std::vector<long long>(top.rank(), 0));
  for (int j = 0; j < top.rank(); ++j) {
    const auto v = decompose(bottom, restrict(k, coset_space(lat, h, top.basis[j])));
    for (int i = 0; i < bottom.rank(); ++i) m[i][j] = v[i];
  }
  return m;
}

IntMatrix transfer(const TransferSystem& o, int k, int h) {
  const auto& lat = o.lattice();
  if (!lat->leq(k, h) || !o.has(k, h))
    throw InputError("transfer: edge not in O: (" + lat->label(k) + ", " + lat->label(h) + ")");
  const auto bottom = level(o, k);
  const auto top = level(o, h);
  IntMatrix m(top.rank(), std::vector<long long>(bottom.rank(), 0));
  for (int j = 0; j < bottom.rank(); ++j) {
    const auto v = decompose(top, induce(h, coset_space(lat, k, bottom.basis[j])));
    for (int i = 0; i < top.rank(); ++i) m[i][j] = v[i];
  }
  return m;
}

IntVector apply_matrix(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw InputError("apply: dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

bool frobenius_holds(const TransferSystem& o, int k, int h) {
  const auto top = level(o, h);
  const auto bottom = level(o, k);
  const auto res = restriction(o, k, h);
  const auto tr = transfer(o, k, h);
  for (int i = 0; i < top.rank(); ++i)
    for (int j = 0; j < bottom.rank(); ++j) {
      const auto a = basis_vector(top, top.basis[i]);
      const auto b = basis_vector(bottom, bottom.basis[j]);
      if (apply_matrix(tr, multiply(bottom, apply_matrix(res, a), b)) != multiply(top, a, apply_matrix(tr, b))) return false;
    }
  return true;
}

namespace {

/// Representatives of the double cosets A x B inside H, least element first.
std::vector<int> double_coset_reps(const Lattice& lat, int a, int b, int h) {
  const Group& g = lat.group();
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  for (int x : lat.subgroup(h).elements) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int u : lat.subgroup(a).elements)
      for (int v : lat.subgroup(b).elements) seen[g.mul(g.mul(u, x), v)] = 1;
  }
  return reps;
}

}  // namespace

bool double_coset_holds(const TransferSystem& o, int k, int h, int l) {
  const Lattice& lat = *o.lattice();
  if (!lat.leq(l, h)) throw InputError("double_coset_holds: L is not contained in H");
  const Group& g = lat.group();
  const auto bottom = level(o, k);
  const auto target = level(o, l);
  const auto lhs = [&] {
    IntMatrix m = restriction(o, l, h);
    IntMatrix t = transfer(o, k, h);
    IntMatrix out(target.rank(), std::vector<long long>(bottom.rank(), 0));
    for (int i = 0; i < target.rank(); ++i)
      for (int j = 0; j < bottom.rank(); ++j)
        for (std::size_t r = 0; r < t.size(); ++r) out[i][j] += m[i][r] * t[r][j];
    return out;
  }();
  for (int j = 0; j < bottom.rank(); ++j) {
    const int m = bottom.basis[j];
    IntVector rhs(target.rank(), 0);
    for (int x : double_coset_reps(lat, l, k, h)) {
      // res to J = K ∩ x^-1 L x, conjugate by x, transfer to L.
      const int j_sub = lat.intersect(k, lat.conjugate(g.inv(x), l));
      for (int y : double_coset_reps(lat, j_sub, m, k)) {
        const int stab = lat.intersect(j_sub, lat.conjugate(y, m));
        const int pos = target.position(lat.conjugate(x, stab));
        if (pos < 0) return false;
        ++rhs[pos];
      }
    }
    for (int i = 0; i < target.rank(); ++i)
      if (rhs[i] != lhs[i][j]) return false;
  }
  return true;
}

}  // namespace bipoly
