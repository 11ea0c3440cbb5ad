#include "bipoly/reciprocity.hpp"

#include <algorithm>
#include <sstream>

#include "bipoly/bispan.hpp"

namespace bipoly {

namespace {

struct Cosets {
  std::vector<int> reps;      // least element of each coset, increasing
  std::vector<int> coset_of;  // element of H -> coset index
};

Cosets left_cosets(const Lattice& lat, int k, int h) {
  const Group& g = lat.group();
  Cosets c;
  c.coset_of.assign(g.order(), -1);
  for (int a : lat.subgroup(h).elements) {
    if (c.coset_of[a] >= 0) continue;
    for (int x : lat.subgroup(k).elements) c.coset_of[g.mul(a, x)] = static_cast<int>(c.reps.size());
    c.reps.push_back(a);
  }
  return c;
}

}  // namespace

Formula expand_norm_sum(const LatticePtr& lattice, int k, int h, int n, long long function_cap) {
  const Lattice& lat = *lattice;
  if (k < 0 || h < 0 || k >= lat.count() || h >= lat.count()) throw InputError("expand_norm_sum: bad subgroup index");
  if (!lat.leq(k, h)) throw InputError("expand_norm_sum: K is not a subgroup of H");
  if (n < 1) throw InputError("expand_norm_sum: need at least one summand");
  const Group& g = lat.group();
  const Cosets cs = left_cosets(lat, k, h);
  const int m = static_cast<int>(cs.reps.size());
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= n;
    if (total > function_cap) throw ResourceError("expand_norm_sum: too many functions");
  }
  const auto& elems = lat.subgroup(h).elements;
  // move[a][c] = coset of a^-1 * rep_c, so (a·phi)(c) = phi(move[a][c]).
  std::vector<std::vector<int>> move;
  for (int a : elems) {
    std::vector<int> row(m);
    for (int c = 0; c < m; ++c) row[c] = cs.coset_of[g.mul(g.inv(a), cs.reps[c])];
    move.push_back(std::move(row));
  }
  auto encode = [&](const std::vector<int>& phi) {
    long long code = 0;
    for (int c = m - 1; c >= 0; --c) code = code * n + phi[c];
    return code;
  };

  Formula out{lattice, k, h, n, {}};
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<int> phi(m, 0);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int c = 0; c < m; ++c) {
      phi[c] = static_cast<int>(rest % n);
      rest /= n;
    }
    if (seen[code]) continue;
    std::vector<int> canon = phi;
    std::vector<std::vector<int>> orbit;
    for (const auto& row : move) {
      std::vector<int> moved(m);
      for (int c = 0; c < m; ++c) moved[c] = phi[row[c]];
      seen[encode(moved)] = 1;
      canon = std::min(canon, moved);
    }
    ElementSet stab;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      bool fixes = true;
      for (int c = 0; c < m && fixes; ++c) fixes = canon[move[i][c]] == canon[c];
      if (fixes) stab.set(static_cast<std::size_t>(elems[i]));
    }
    Term t;
    t.transfer_from = lat.find(stab);
    t.function = canon;
    std::vector<char> covered(m, 0);
    for (int c = 0; c < m; ++c) {
      if (covered[c]) continue;
      for (int l : lat.subgroup(t.transfer_from).elements) covered[cs.coset_of[g.mul(l, cs.reps[c])]] = 1;
      const int conj = cs.reps[c];
      t.factors.push_back({conj, lat.intersect(t.transfer_from, lat.conjugate(conj, k)), t.transfer_from, canon[c]});
    }
    out.terms.push_back(std::move(t));
  }
  std::sort(out.terms.begin(), out.terms.end(), [&](const Term& a, const Term& b) {
    const int sa = lat.subgroup(a.transfer_from).size(), sb = lat.subgroup(b.transfer_from).size();
    if (sa != sb) return sa > sb;
    if (a.transfer_from != b.transfer_from) return a.transfer_from < b.transfer_from;
    return a.function < b.function;
  });
  return out;
}

std::vector<std::string> default_symbols(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return out;
}

namespace {

std::string superscript(int v) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(v)) s += digits[c - '0'];
  return s;
}

std::string braced(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

}  // namespace

std::string pretty_print(const Formula& f, const std::vector<std::string>& symbols) {
  if (static_cast<int>(symbols.size()) < f.n) throw InputError("pretty_print: not enough symbol names");
  const Lattice& lat = *f.lattice;
  const Group& g = lat.group();
  const bool abbreviated = lat.subgroups_of(f.h).size() == 2;

  int gen = -1;
  for (int a = 0; a < g.order() && gen < 0; ++a)
    if (g.element_order(a) == g.order()) gen = a;
  std::vector<int> power(g.order(), -1);
  if (gen >= 0)
    for (int p = 0, x = g.identity(); p < g.order(); ++p, x = g.mul(gen, x)) power[x] = p;

  auto scripts = [&](int from, int to) {
    return abbreviated ? std::string() : "_" + braced(lat.label(from)) + "^" + braced(lat.label(to));
  };
  auto conjugator = [&](int a) -> std::string {
    if (a == g.identity()) return "";
    if (gen < 0) return "(g" + std::to_string(a) + ")";
    return power[a] == 1 ? "γ" : "γ" + superscript(power[a]);
  };
  auto body = [&](const Term& t) {
    std::string s = t.multiplicity > 1 ? std::to_string(t.multiplicity) : "";
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const Factor& x = t.factors[i];
      if (i) s += "·";
      s += conjugator(x.conjugator);
      if (x.norm_from == x.norm_to)
        s += symbols[x.symbol];
      else
        s += "N" + scripts(x.norm_from, x.norm_to) + "(" + symbols[x.symbol] + ")";
    }
    return s;
  };

  std::vector<std::string> parts;
  for (std::size_t i = 0; i < f.terms.size();) {
    const int l = f.terms[i].transfer_from;
    if (l == f.h) {
      parts.push_back(body(f.terms[i++]));
      continue;
    }
    std::string group;
    for (; i < f.terms.size() && f.terms[i].transfer_from == l; ++i) group += (group.empty() ? "" : " + ") + body(f.terms[i]);
    parts.push_back("tr" + scripts(l, f.h) + "(" + group + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string pretty_print(const Formula& f) { return pretty_print(f, default_symbols(f.n)); }

namespace {

using TermShape = std::pair<int, std::vector<std::pair<int, int>>>;

std::string describe(const std::vector<TermShape>& shapes) {
  std::ostringstream os;
  for (const auto& [l, fs] : shapes) {
    os << "[L" << l << ":";
    for (auto [m, s] : fs) os << " (M" << m << ",x" << s << ")";
    os << "]";
  }
  return os.str();
}

}  // namespace

CrossCheck cross_check_with_bispan(const LatticePtr& lattice, int k, int h, int n) {
  const Lattice& lat = *lattice;
  const Formula f = expand_norm_sum(lattice, k, h, n);
  std::vector<TermShape> from_formula;
  for (const auto& t : f.terms) {
    TermShape s{lat.rep_under(h, t.transfer_from), {}};
    for (const auto& x : t.factors) s.second.emplace_back(lat.rep_under(h, x.norm_from), x.symbol);
    std::sort(s.second.begin(), s.second.end());
    for (int i = 0; i < t.multiplicity; ++i) from_formula.push_back(s);
  }

  const GSet orbit = coset_space(lattice, h, k);
  const Bispan composite = compose(gen_N(to_point(orbit)), gen_T(fold_map(orbit, n)));
  const GSet& u1 = composite.u1();
  const GSet& u2 = composite.u2();
  std::vector<TermShape> from_bispan;
  for (int o = 0; o < u2.orbit_count(); ++o) {
    const int p = u2.orbit_rep(o);
    const int l = u2.orbit_stabilizer(o);
    TermShape s{lat.rep_under(h, l), {}};
    std::vector<char> done(u1.size(), 0);
    for (int u = 0; u < u1.size(); ++u) {
      if (composite.g()(u) != p || done[u]) continue;
      for (int a : lat.subgroup(l).elements) done[u1.act(a, u)] = 1;
      s.second.emplace_back(lat.rep_under(h, u1.stabilizer(u)), composite.f()(u) / orbit.size());
    }
    std::sort(s.second.begin(), s.second.end());
    from_bispan.push_back(std::move(s));
  }
  std::sort(from_formula.begin(), from_formula.end());
  std::sort(from_bispan.begin(), from_bispan.end());
  CrossCheck out;
  out.agrees = from_formula == from_bispan;
  if (!out.agrees) out.detail = "formula " + describe(from_formula) + " vs bispan " + describe(from_bispan);
  else out.detail = std::to_string(f.terms.size()) + " terms, " + std::to_string(u2.orbit_count()) + " orbits";
  return out;
}

}  // namespace bipoly
