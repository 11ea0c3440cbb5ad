#include "json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace bipoly::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], path + "/" + std::to_string(i)));
  return out;
}

void check_group_name(const LatticePtr& lat, const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("group")) return;
  const json& g = j["group"];
  if (!g.is_string()) fail(path + "/group", "expected a string");
  if (g.get<std::string>() != lat->group().name())
    fail(path + "/group", "group \"" + g.get<std::string>() + "\" does not match \"" + lat->group().name() + "\"");
}

int subgroup_at(const Lattice& lat, const json& j, const std::string& path) {
  try {
    return parse_subgroup(lat, j);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

GSet gset_at(const LatticePtr& lat, const json& j, const std::string& path) {
  check_group_name(lat, j, path);
  const json& orbits = field(j, "orbits", path);
  if (!orbits.is_array()) fail(path + "/orbits", "expected an array");
  std::vector<int> stabs;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    stabs.push_back(subgroup_at(*lat, orbits[i], path + "/orbits/" + std::to_string(i)));
  return gset_from_orbit_types(lat, lat->top(), stabs);
}

GMap gmap_at(const LatticePtr& lat, const json& j, const std::string& path) {
  GSet s = gset_at(lat, field(j, "source", path), path + "/source");
  GSet t = gset_at(lat, field(j, "target", path), path + "/target");
  std::vector<int> pts = int_list(field(j, "points", path), path + "/points");
  try {
    return GMap(std::move(s), std::move(t), std::move(pts));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Group parse_group(const json& j, int order_cap) {
  const json& name = field(j, "name", "");
  if (!name.is_string()) fail("/name", "expected a string");
  if (j.contains("cayley")) return Group::from_cayley(name.get<std::string>(), int_table(j["cayley"], "/cayley"), order_cap);
  if (j.contains("permutations"))
    return Group::from_permutations(name.get<std::string>(), int_table(j["permutations"], "/permutations"), order_cap);
  fail("", "expected \"cayley\" or \"permutations\"");
}

Group load_group(const std::string& spec, int order_cap) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return parse_group(read_json_file(spec), order_cap);
  return builtin_group(spec, order_cap);
}

int parse_subgroup(const Lattice& lat, const std::string& text) {
  std::string squashed;
  for (char c : text)
    if (c != '_' && c != '{' && c != '}') squashed += c;
  for (int s = 0; s < lat.count(); ++s) {
    std::string label;
    for (char c : lat.label(s))
      if (c != '_') label += c;
    if (label == squashed || lat.label(s) == text) return s;
  }
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    const int v = std::stoi(text);
    if (v < lat.count()) return v;
  }
  throw InputError("unknown subgroup \"" + text + "\"");
}

int parse_subgroup(const Lattice& lat, const json& j) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= lat.count()) throw InputError("subgroup index " + std::to_string(v) + " out of range");
    return v;
  }
  if (j.is_string()) return parse_subgroup(lat, j.get<std::string>());
  throw InputError("expected a subgroup index or label");
}

GSet parse_gset(const LatticePtr& lat, const json& j) { return gset_at(lat, j, ""); }

GMap canonical_iso(const GSet& x) {
  const auto& lat = *x.lattice();
  const Group& g = lat.group();
  std::vector<int> stabs;
  for (int o = 0; o < x.orbit_count(); ++o) stabs.push_back(x.orbit_stabilizer(o));
  GSet y = gset_from_orbit_types(x.lattice(), x.acting(), stabs);
  std::vector<int> pts(x.size(), -1);
  int offset = 0;
  for (int o = 0; o < x.orbit_count(); ++o) {
    const int k = stabs[o];
    // Cosets numbered by least element, as in coset_space.
    std::vector<int> coset_of(g.order(), -1);
    int count = 0;
    for (int a : lat.subgroup(x.acting()).elements) {
      if (coset_of[a] >= 0) continue;
      for (int b : lat.subgroup(k).elements) coset_of[g.mul(a, b)] = count;
      ++count;
    }
    for (int a : lat.subgroup(x.acting()).elements) pts[x.act(a, x.orbit_rep(o))] = offset + coset_of[a];
    offset += count;
  }
  return GMap(x, std::move(y), std::move(pts));
}

json to_json(const GSet& x) {
  json orbits = json::array();
  for (int o = 0; o < x.orbit_count(); ++o) orbits.push_back(x.orbit_stabilizer(o));
  return {{"orbits", orbits}};
}

GMap parse_gmap(const LatticePtr& lat, const json& j) { return gmap_at(lat, j, ""); }

json to_json(const GMap& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"points", f.points()}};
}

TransferSystem parse_system(const LatticePtr& lat, const json& j, bool strict) {
  check_group_name(lat, j, "");
  const json& edges = field(j, "edges", "");
  if (!edges.is_array()) fail("/edges", "expected an array");
  std::vector<std::pair<int, int>> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = "/edges/" + std::to_string(i);
    if (!edges[i].is_array() || edges[i].size() != 2) fail(p, "expected a pair [k, h]");
    list.emplace_back(subgroup_at(*lat, edges[i][0], p + "/0"), subgroup_at(*lat, edges[i][1], p + "/1"));
  }
  try {
    if (!strict) return TransferSystem::from_edges(lat, list);
    for (int s = 0; s < lat->count(); ++s) list.emplace_back(s, s);
    return TransferSystem::from_closed_edges(lat, list);
  } catch (const InputError& e) {
    fail("/edges", e.what());
  }
}

json to_json(const TransferSystem& o) {
  json edges = json::array();
  for (auto [k, h] : o.nontrivial_edges()) edges.push_back({k, h});
  return {{"group", o.lattice()->group().name()}, {"edges", edges}};
}

Bispan parse_bispan(const LatticePtr& lat, const json& j) {
  check_group_name(lat, j, "");
  GMap f = gmap_at(lat, field(j, "f", ""), "/f");
  GMap g = gmap_at(lat, field(j, "g", ""), "/g");
  GMap h = gmap_at(lat, field(j, "h", ""), "/h");
  try {
    return Bispan(std::move(f), std::move(g), std::move(h));
  } catch (const InputError& e) {
    fail("", e.what());
  }
}

namespace {

GMap inverse(const GMap& iso) {
  std::vector<int> pts(iso.target().size());
  for (int p = 0; p < iso.source().size(); ++p) pts[iso(p)] = p;
  return GMap::unchecked(iso.target(), iso.source(), std::move(pts));
}

}  // namespace

Bispan canonical(const Bispan& p) {
  const GMap s = canonical_iso(p.source());
  const GMap u1 = canonical_iso(p.u1());
  const GMap u2 = canonical_iso(p.u2());
  const GMap t = canonical_iso(p.target());
  const GMap u1_inv = inverse(u1);
  const GMap u2_inv = inverse(u2);
  return Bispan(compose(s, compose(p.f(), u1_inv)), compose(u2, compose(p.g(), u1_inv)),
                compose(t, compose(p.h(), u2_inv)));
}

json to_json(const Bispan& p_in) {
  const Bispan p = canonical(p_in);
  return {{"group", p.source().group().name()}, {"f", to_json(p.f())}, {"g", to_json(p.g())}, {"h", to_json(p.h())}};
}

std::string orbit_label(const Lattice& lat, int acting, int k) { return lat.label(acting) + "/" + lat.label(k); }

std::string gset_label(const GSet& x) {
  if (x.size() == 0) return "∅";
  std::string out;
  for (int o = 0; o < x.orbit_count(); ++o)
    out += (o ? " ⨿ " : "") + orbit_label(*x.lattice(), x.acting(), x.orbit_stabilizer(o));
  return out;
}

std::string describe(const Bispan& p_in) {
  const Bispan p = canonical(p_in);
  std::ostringstream os;
  auto pts = [](const GMap& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.points().size(); ++i) s += (i ? " " : "") + std::to_string(m.points()[i]);
    return s + "]";
  };
  os << "T_h ∘ N_g ∘ R_f : S -> T\n";
  os << "S  = " << gset_label(p.source()) << "\n";
  os << "U1 = " << gset_label(p.u1()) << "\n";
  os << "U2 = " << gset_label(p.u2()) << "\n";
  os << "T  = " << gset_label(p.target()) << "\n";
  os << "f  = " << pts(p.f()) << "\n";
  os << "g  = " << pts(p.g()) << "\n";
  os << "h  = " << pts(p.h()) << "\n";
  return os.str();
}

json to_json(const CompatReport& r) {
  json out = {{"compatible", r.compatible}, {"checked_pairs", r.checked_pairs}};
  if (r.witness) {
    const auto& w = *r.witness;
    const auto& lat = *w.t.lattice();
    out["witness"] = {{"k", w.k},
                      {"h", w.h},
                      {"k_label", lat.label(w.k)},
                      {"h_label", lat.label(w.h)},
                      {"t_orbits", w.t_orbits},
                      {"offending_orbit", w.offending.stabilizer_class},
                      {"offending_label", orbit_label(lat, w.h, w.offending.stabilizer_class)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const PairCensus& c) {
  json pairs = json::array();
  for (auto [a, m] : c.comparable_incompatible) pairs.push_back({a, m});
  json anomalies = json::array();
  for (auto [a, m] : c.anomalies) anomalies.push_back({a, m});
  json systems = json::array();
  for (const auto& o : c.systems) systems.push_back(to_json(o)["edges"]);
  return {{"group", c.group},
          {"systems", c.n_systems},
          {"total_pairs", c.total_pairs},
          {"comparable", c.comparable_pairs},
          {"filter_pass", c.filter_pass},
          {"compatible", c.compatible_pairs},
          {"comparable_incompatible", pairs},
          {"anomalies", anomalies},
          {"edge_lists", systems}};
}

json to_json(const Formula& f) {
  const auto& lat = *f.lattice;
  json terms = json::array();
  for (const auto& t : f.terms) {
    json factors = json::array();
    for (const auto& x : t.factors)
      factors.push_back({{"conjugator", x.conjugator},
                         {"norm_from", x.norm_from},
                         {"norm_to", x.norm_to},
                         {"symbol", x.symbol}});
    terms.push_back({{"transfer_from", t.transfer_from},
                     {"transfer_label", lat.label(t.transfer_from)},
                     {"multiplicity", t.multiplicity},
                     {"function", t.function},
                     {"factors", factors}});
  }
  return {{"group", lat.group().name()}, {"k", f.k}, {"h", f.h}, {"summands", f.n}, {"terms", terms},
          {"text", pretty_print(f)}};
}

bool is_lambda_spec(const json& j) { return j.is_object() && j.contains("lambda"); }

PermUniverse parse_universe(const LatticePtr& lat, const json& j) {
  check_group_name(lat, j, "");
  const json& l = field(j, "lambda", "");
  if (!l.is_array()) fail("/lambda", "expected an array");
  std::vector<int> lambda;
  for (std::size_t i = 0; i < l.size(); ++i) lambda.push_back(subgroup_at(*lat, l[i], "/lambda/" + std::to_string(i)));
  try {
    return PermUniverse(lat, lambda);
  } catch (const InputError& e) {
    fail("/lambda", e.what());
  }
}

StabilizerDatum parse_datum(const LatticePtr& lat, const json& j) {
  check_group_name(lat, j, "");
  const json& s = field(j, "stabilizers", "");
  if (!s.is_object()) fail("/stabilizers", "expected an object keyed by subgroup");
  std::vector<std::vector<int>> d(lat->count());
  std::vector<char> given(lat->count(), 0);
  for (auto it = s.begin(); it != s.end(); ++it) {
    const std::string p = "/stabilizers/" + it.key();
    const int h = subgroup_at(*lat, json(it.key()), p);
    if (!it.value().is_array()) fail(p, "expected an array");
    for (std::size_t i = 0; i < it.value().size(); ++i)
      d[h].push_back(subgroup_at(*lat, it.value()[i], p + "/" + std::to_string(i)));
    given[h] = 1;
  }
  for (int h = 0; h < lat->count(); ++h)
    if (!given[h]) fail("/stabilizers", "no entry for subgroup " + std::to_string(h) + " (" + lat->label(h) + ")");
  try {
    return StabilizerDatum(lat, d);
  } catch (const InputError& e) {
    fail("/stabilizers", e.what());
  }
}

}  // namespace bipoly::io
