// bipoly: batch command-line front end. See README.md for commands and formats.

#include <boost/dynamic_bitset.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bipoly/sampling.hpp"
#include "json_io.hpp"

namespace {

using namespace bipoly;
using bipoly::io::json;

constexpr std::uint64_t kDefaultSeed = 12345;

enum class Format { text, json, csv };

struct Config {
  std::string group;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  int order_cap = kDefaultOrderCap;
  std::string out;
};

// Exit status for a computation that succeeded with a negative answer.
constexpr int kNegative = 2;

class Runner {
 public:
  explicit Runner(const Config& c) : cfg_(c) {}

  Format format() const {
    if (cfg_.format == "json") return Format::json;
    if (cfg_.format == "csv") return Format::csv;
    return Format::text;
  }

  /// The lattice of --group, or of the "group" field of `fallback` when --group is absent.
  LatticePtr lattice(const json* fallback = nullptr) {
    if (lat_) return lat_;
    std::string spec = cfg_.group;
    if (spec.empty() && fallback && fallback->is_object() && fallback->contains("group") &&
        (*fallback)["group"].is_string())
      spec = (*fallback)["group"].get<std::string>();
    if (spec.empty()) throw InputError("--group is required");
    lat_ = std::make_shared<const Lattice>(io::load_group(spec, cfg_.order_cap));
    return lat_;
  }

  std::ostringstream out;
  std::uint64_t seed() const { return cfg_.seed; }

  void emit_json(const json& j) { out << j.dump(2) << "\n"; }
  void no_csv(const std::string& cmd) {
    if (format() == Format::csv) throw InputError(cmd + ": csv output is not available; use text or json");
  }

 private:
  Config cfg_;
  LatticePtr lat_;
};

std::string edge_text(const Lattice& lat, const TransferSystem& o) {
  const auto edges = o.nontrivial_edges();
  if (edges.empty()) return "(trivial)";
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? ", " : "") + lat.label(edges[i].first) + "->" + lat.label(edges[i].second);
  return s;
}

std::string edge_csv(const TransferSystem& o) {
  std::string s;
  for (auto [k, h] : o.nontrivial_edges()) s += (s.empty() ? "" : ";") + std::to_string(k) + ">" + std::to_string(h);
  return s;
}

TransferSystem load_system(Runner& r, const std::string& path, bool strict) {
  const json j = io::read_json_file(path);
  try {
    return io::parse_system(r.lattice(&j), j, strict);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- lattice ----

int cmd_lattice(Runner& r) {
  const auto lat = r.lattice();
  const auto& g = lat->group();
  if (r.format() == Format::json) {
    json subs = json::array();
    for (int s = 0; s < lat->count(); ++s)
      subs.push_back({{"index", s},
                      {"label", lat->label(s)},
                      {"order", lat->subgroup(s).size()},
                      {"class", lat->class_of(s)},
                      {"elements", lat->subgroup(s).elements}});
    r.emit_json({{"group", g.name()}, {"order", g.order()}, {"subgroups", subs}});
  } else if (r.format() == Format::csv) {
    r.out << "index,label,order,class,elements\n";
    for (int s = 0; s < lat->count(); ++s) {
      r.out << s << "," << lat->label(s) << "," << lat->subgroup(s).size() << "," << lat->class_of(s) << ",";
      for (std::size_t i = 0; i < lat->subgroup(s).elements.size(); ++i)
        r.out << (i ? " " : "") << lat->subgroup(s).elements[i];
      r.out << "\n";
    }
  } else {
    r.out << "group " << g.name() << " (order " << g.order() << ", " << lat->count() << " subgroups)\n";
    for (int s = 0; s < lat->count(); ++s)
      r.out << "  " << s << "  " << lat->label(s) << "  order " << lat->subgroup(s).size() << "  class "
            << lat->class_of(s) << "\n";
  }
  return 0;
}

// ---- enumerate ----

std::vector<std::pair<int, int>> covers(const std::vector<TransferSystem>& systems) {
  const std::size_t n = systems.size();
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n)), above(n, boost::dynamic_bitset<>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq(systems[a], systems[b])) {
        below[b].set(a);
        above[a].set(b);
      }
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = above[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above[a].find_next(b))
      if (!(above[a] & below[b]).any()) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

int cmd_enumerate(Runner& r, std::size_t cap) {
  const auto lat = r.lattice();
  const auto systems = enumerate_transfer_systems(lat, cap);
  const auto cov = covers(systems);
  if (r.format() == Format::json) {
    json list = json::array();
    for (const auto& o : systems) list.push_back(io::to_json(o)["edges"]);
    r.emit_json({{"group", lat->group().name()}, {"count", systems.size()}, {"systems", list}, {"covers", cov}});
  } else if (r.format() == Format::csv) {
    r.out << "index,edge_count,edges\n";
    for (std::size_t i = 0; i < systems.size(); ++i)
      r.out << i << "," << systems[i].nontrivial_edges().size() << "," << edge_csv(systems[i]) << "\n";
  } else {
    r.out << "group " << lat->group().name() << "\ncount " << systems.size() << "\n";
    for (std::size_t i = 0; i < systems.size(); ++i) r.out << "  [" << i << "] " << edge_text(*lat, systems[i]) << "\n";
    r.out << "covers";
    for (auto [a, b] : cov) r.out << " " << a << "<" << b;
    r.out << "\n";
  }
  return 0;
}

// ---- census ----

int cmd_census(Runner& r) {
  const auto lat = r.lattice();
  const PairCensus c = census(lat);
  if (r.format() == Format::json) {
    r.emit_json(io::to_json(c));
  } else if (r.format() == Format::csv) {
    r.out << "group,systems,total_pairs,comparable,filter_pass,compatible,comparable_incompatible\n";
    r.out << c.group << "," << c.n_systems << "," << c.total_pairs << "," << c.comparable_pairs << "," << c.filter_pass
          << "," << c.compatible_pairs << "," << c.comparable_incompatible.size() << "\n";
  } else {
    r.out << "group " << c.group << "\n";
    r.out << "systems " << c.n_systems << "\n";
    r.out << "ordered pairs " << c.total_pairs << "\n";
    r.out << "comparable " << c.comparable_pairs << "\n";
    r.out << "filter " << c.filter_pass << "\n";
    r.out << "compatible " << c.compatible_pairs << "\n";
    for (auto [a, m] : c.comparable_incompatible)
      r.out << "  incompatible: O_a = {" << edge_text(*lat, c.systems[a]) << "}, O_m = {"
            << edge_text(*lat, c.systems[m]) << "}\n";
    if (!c.anomalies.empty()) r.out << "anomalies " << c.anomalies.size() << "\n";
  }
  return c.anomalies.empty() ? 0 : kNegative;
}

// ---- check ----

int cmd_check(Runner& r, const std::string& oa_path, const std::string& om_path, bool strict, bool probe) {
  const TransferSystem oa = load_system(r, oa_path, strict);
  const TransferSystem om = load_system(r, om_path, strict);
  const auto& lat = *oa.lattice();
  const CompatReport rep = is_compatible(oa, om);
  std::optional<CoinductionProbe> pr;
  if (probe && rep.compatible) pr = check_coinduction_preserves(oa, om);

  if (r.format() == Format::json) {
    json j = io::to_json(rep);
    if (pr) j["probe"] = {{"preserves", pr->preserves}, {"maps_checked", pr->maps_checked}, {"finding", pr->finding ? json(*pr->finding) : json(nullptr)}};
    r.emit_json(j);
  } else if (r.format() == Format::csv) {
    r.out << "compatible,checked_pairs,k,h,t_orbits,offending\n";
    r.out << (rep.compatible ? "true" : "false") << "," << rep.checked_pairs << ",";
    if (rep.witness) {
      const auto& w = *rep.witness;
      r.out << w.k << "," << w.h << ",";
      for (std::size_t i = 0; i < w.t_orbits.size(); ++i) r.out << (i ? " " : "") << w.t_orbits[i];
      r.out << "," << w.offending.stabilizer_class;
    } else {
      r.out << ",,,";
    }
    r.out << "\n";
  } else {
    r.out << "O_a = {" << edge_text(lat, oa) << "}\nO_m = {" << edge_text(lat, om) << "}\n";
    if (rep.compatible) {
      r.out << "compatible (" << rep.checked_pairs << " edge/test-set pairs checked)\n";
    } else {
      const auto& w = *rep.witness;
      r.out << "incompatible\n";
      r.out << "  multiplicative edge " << lat.label(w.k) << "->" << lat.label(w.h) << "\n";
      r.out << "  admissible " << lat.label(w.k) << "-set T = " << io::gset_label(w.t) << "\n";
      r.out << "  Map^" << lat.label(w.k) << "(" << lat.label(w.h) << ", T) has orbit "
            << io::orbit_label(lat, w.h, w.offending.stabilizer_class) << ", not admissible in O_a\n";
    }
    if (pr) {
      r.out << "coinduction probe: " << pr->maps_checked << " maps, "
            << (pr->preserves ? "preserved" : "FINDING: " + pr->finding.value_or("")) << "\n";
    }
  }
  if (!rep.compatible) return kNegative;
  if (pr && !pr->preserves) return kNegative;
  return 0;
}

// ---- hulls ----

int cmd_hulls(Runner& r, const std::string& oa_path, const std::string& om_path, bool strict) {
  r.no_csv("hulls");
  const TransferSystem oa = load_system(r, oa_path, strict);
  const auto& lat = *oa.lattice();
  const TransferSystem mh = multiplicative_hull(oa);
  std::optional<TransferSystem> ah;
  if (!om_path.empty()) ah = additive_hull(oa, load_system(r, om_path, strict));
  if (r.format() == Format::json) {
    json j = {{"multiplicative_hull", io::to_json(mh)}};
    if (ah) j["additive_hull"] = io::to_json(*ah);
    r.emit_json(j);
  } else {
    r.out << "multiplicative hull {" << edge_text(lat, mh) << "}\n";
    if (ah) r.out << "additive hull {" << edge_text(lat, *ah) << "}\n";
  }
  return 0;
}

// ---- reciprocity ----

int cmd_reciprocity(Runner& r, const std::string& from, const std::string& to, int n, const std::string& symbols) {
  r.no_csv("reciprocity");
  const auto lat = r.lattice();
  const int k = io::parse_subgroup(*lat, from);
  const int h = io::parse_subgroup(*lat, to);
  if (!lat->leq(k, h)) throw InputError("--from must be a subgroup of --to");
  if (n < 1) throw InputError("--summands must be positive");
  std::vector<std::string> names = default_symbols(n);
  if (!symbols.empty()) {
    names.clear();
    std::stringstream ss(symbols);
    for (std::string s; std::getline(ss, s, ',');) names.push_back(s);
    if (static_cast<int>(names.size()) != n) throw InputError("--symbols needs exactly --summands names");
  }
  const Formula f = expand_norm_sum(lat, k, h, n);
  const CrossCheck cc = cross_check_with_bispan(lat, k, h, n);
  if (r.format() == Format::json) {
    json j = io::to_json(f);
    j["text"] = pretty_print(f, names);
    j["symbols"] = names;
    j["cross_check"] = {{"agrees", cc.agrees}, {"detail", cc.detail}};
    r.emit_json(j);
  } else {
    r.out << pretty_print(f, names) << "\n";
    r.out << "terms " << f.terms.size() << "; bispan cross-check " << (cc.agrees ? "agrees" : "DISAGREES") << "\n";
    if (!cc.agrees) r.out << cc.detail << "\n";
  }
  return cc.agrees ? 0 : kNegative;
}

// ---- bispan ----

Bispan load_bispan(Runner& r, const std::string& path) {
  const json j = io::read_json_file(path);
  try {
    return io::parse_bispan(r.lattice(&j), j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit_bispan(Runner& r, const Bispan& p) {
  if (r.format() == Format::json)
    r.emit_json(io::to_json(p));
  else
    r.out << io::describe(p);
}

int cmd_bispan_compose(Runner& r, const std::string& q_path, const std::string& p_path) {
  r.no_csv("bispan compose");
  const Bispan q = load_bispan(r, q_path);
  const Bispan p = load_bispan(r, p_path);
  emit_bispan(r, compose(q, p));
  return 0;
}

int cmd_bispan_subgraph(Runner& r, const std::string& path, const std::string& oa, const std::string& om, bool strict) {
  r.no_csv("bispan subgraph");
  const Bispan p = load_bispan(r, path);
  const SubgraphSpec spec = SubgraphSpec::unchecked(load_system(r, oa, strict), load_system(r, om, strict));
  const bool in = in_subgraph(p, spec);
  if (r.format() == Format::json)
    r.emit_json({{"in_subgraph", in}});
  else
    r.out << (in ? "in subgraph\n" : "not in subgraph\n");
  return in ? 0 : kNegative;
}

int cmd_bispan_sample(Runner& r, const std::string& oa, const std::string& om, bool strict, int count, int max_orbits) {
  r.no_csv("bispan sample");
  const SubgraphSpec spec = SubgraphSpec::unchecked(load_system(r, oa, strict), load_system(r, om, strict));
  const auto lat = spec.o_a.lattice();
  Sampler sampler(r.seed());
  json list = json::array();
  for (int i = 0; i < count; ++i) {
    const GSet s = sampler.gset(lat, lat->top(), max_orbits, true);
    const GSet t = sampler.gset(lat, lat->top(), max_orbits, false);
    const Bispan p = sampler.bispan_in(spec, s, t, max_orbits);
    if (r.format() == Format::json) {
      list.push_back(io::to_json(p));
    } else {
      r.out << "# sample " << i << "\n" << io::describe(p);
    }
  }
  if (r.format() == Format::json) r.emit_json(list);
  return 0;
}

// ---- burnside-table ----

json matrix_json(const IntMatrix& m) { return json(m); }

int cmd_burnside(Runner& r, const std::string& path, bool strict, const std::string& level_arg) {
  const TransferSystem o = load_system(r, path, strict);
  const auto& lat = *o.lattice();
  std::vector<int> levels;
  if (!level_arg.empty()) {
    levels.push_back(io::parse_subgroup(lat, level_arg));
  } else {
    for (int h = 0; h < lat.count(); ++h)
      if (lat.rep_under(lat.top(), h) == h) levels.push_back(h);
  }
  const Format fmt = r.format();
  json jl = json::array();
  if (fmt == Format::csv) r.out << "table,h,k,i,j,l,value\n";
  for (int h : levels) {
    const BurnsideLevel lvl = level(o, h);
    const auto mt = multiplication_table(lvl);
    std::vector<int> below;
    for (int k : lat.subgroups_of(h))
      if (k != h && lat.rep_under(h, k) == k) below.push_back(k);

    if (fmt == Format::csv) {
      for (int i = 0; i < lvl.rank(); ++i) r.out << "basis," << h << ",," << i << ",,," << lvl.basis[i] << "\n";
      for (int i = 0; i < lvl.rank(); ++i)
        for (int j = 0; j < lvl.rank(); ++j)
          for (int l = 0; l < lvl.rank(); ++l) r.out << "mul," << h << ",," << i << "," << j << "," << l << "," << mt[i][j][l] << "\n";
      for (int k : below) {
        const IntMatrix res = restriction(o, k, h);
        for (std::size_t i = 0; i < res.size(); ++i)
          for (std::size_t j = 0; j < res[i].size(); ++j) r.out << "res," << h << "," << k << "," << i << "," << j << ",," << res[i][j] << "\n";
        if (!o.has(k, h)) continue;
        const IntMatrix tr = transfer(o, k, h);
        for (std::size_t i = 0; i < tr.size(); ++i)
          for (std::size_t j = 0; j < tr[i].size(); ++j) r.out << "tr," << h << "," << k << "," << i << "," << j << ",," << tr[i][j] << "\n";
      }
    } else if (fmt == Format::json) {
      json res = json::array(), tr = json::array();
      for (int k : below) {
        res.push_back({{"k", k}, {"matrix", matrix_json(restriction(o, k, h))}});
        if (o.has(k, h)) tr.push_back({{"k", k}, {"matrix", matrix_json(transfer(o, k, h))}});
      }
      jl.push_back({{"h", h}, {"label", lat.label(h)}, {"basis", lvl.basis}, {"multiplication", mt},
                    {"restriction", res}, {"transfer", tr}});
    } else {
      r.out << "level " << lat.label(h) << ": basis";
      for (int k : lvl.basis) r.out << " [" << io::orbit_label(lat, h, k) << "]";
      r.out << "\n";
      for (int i = 0; i < lvl.rank(); ++i)
        for (int j = i; j < lvl.rank(); ++j) {
          r.out << "  [" << io::orbit_label(lat, h, lvl.basis[i]) << "]·[" << io::orbit_label(lat, h, lvl.basis[j]) << "] =";
          bool any = false;
          for (int l = 0; l < lvl.rank(); ++l) {
            if (!mt[i][j][l]) continue;
            r.out << (any ? " + " : " ") << mt[i][j][l] << "[" << io::orbit_label(lat, h, lvl.basis[l]) << "]";
            any = true;
          }
          r.out << (any ? "" : " 0") << "\n";
        }
      auto print = [&](const char* name, int k, const IntMatrix& m) {
        r.out << "  " << name << " " << lat.label(k) << ":";
        for (const auto& row : m) {
          r.out << " [";
          for (std::size_t j = 0; j < row.size(); ++j) r.out << (j ? " " : "") << row[j];
          r.out << "]";
        }
        r.out << "\n";
      };
      for (int k : below) {
        print("res to", k, restriction(o, k, h));
        if (o.has(k, h)) print("tr from", k, transfer(o, k, h));
      }
    }
  }
  if (fmt == Format::json) r.emit_json({{"system", io::to_json(o)}, {"levels", jl}});
  return 0;
}

// ---- universe ----

int cmd_universe(Runner& r, const std::string& path) {
  r.no_csv("universe");
  const json j = io::read_json_file(path);
  const auto lat = r.lattice(&j);
  if (io::is_lambda_spec(j)) {
    const PermUniverse u = io::parse_universe(lat, j);
    const DisksIsometries di = disks_isometries_pair(u);
    if (r.format() == Format::json) {
      r.emit_json({{"lambda", u.lambda()},
                   {"disks", io::to_json(di.disks)},
                   {"isometries", io::to_json(di.isometries)},
                   {"report", io::to_json(di.report)}});
    } else {
      r.out << "disks {" << edge_text(*lat, di.disks) << "}\n";
      r.out << "isometries {" << edge_text(*lat, di.isometries) << "}\n";
      r.out << (di.report.compatible ? "compatible\n" : "incompatible\n");
    }
    return di.report.compatible ? 0 : kNegative;
  }
  const StabilizerDatum d = io::parse_datum(lat, j);
  const TransferSystem disks = little_disks_system(d);
  const CompatReport rep = is_compatible(disks, disks);
  if (r.format() == Format::json) {
    r.emit_json({{"disks", io::to_json(disks)}, {"self_compatibility", io::to_json(rep)}});
  } else {
    r.out << "disks {" << edge_text(*lat, disks) << "}\n";
    r.out << (rep.compatible ? "self-compatible\n" : "not compatible with itself\n");
  }
  return rep.compatible ? 0 : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfer systems, compatibility and bispans for finite groups"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Config cfg;
  app.add_option("--group,-g", cfg.group, "builtin group name (C4, D3, Q8, C2xC2, S3, ...) or JSON group file");
  app.add_option("--format,-f", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized commands")->capture_default_str();
  app.add_option("--order-cap", cfg.order_cap, "largest group order accepted")->capture_default_str();
  app.add_option("--out,-o", cfg.out, "write output to this file instead of stdout");

  bool strict = false;
  app.add_flag("--strict", strict, "reject transfer-system files that are not already closed");

  std::function<int(Runner&)> action;

  auto* lat_cmd = app.add_subcommand("lattice", "list subgroups with their indices and labels");
  lat_cmd->callback([&] { action = [](Runner& r) { return cmd_lattice(r); }; });

  std::size_t cap = kDefaultSystemCap;
  auto* en = app.add_subcommand("enumerate", "all transfer systems and their cover relation");
  en->add_option("--cap", cap, "abort when more systems than this are found")->capture_default_str();
  en->callback([&] { action = [&](Runner& r) { return cmd_enumerate(r, cap); }; });

  auto* ce = app.add_subcommand("census", "count compatible pairs of transfer systems");
  ce->callback([&] { action = [](Runner& r) { return cmd_census(r); }; });

  std::string oa, om;
  bool probe = false;
  auto* ch = app.add_subcommand("check", "decide compatibility of (O_a, O_m); exit 2 if incompatible");
  ch->add_option("--oa", oa, "additive system JSON")->required();
  ch->add_option("--om", om, "multiplicative system JSON")->required();
  ch->add_flag("--probe", probe, "also run the bounded coinduction probe");
  ch->callback([&] { action = [&](Runner& r) { return cmd_check(r, oa, om, strict, probe); }; });

  auto* hu = app.add_subcommand("hulls", "multiplicative hull of O_a; additive hull if --om is given");
  hu->add_option("--oa", oa, "additive system JSON")->required();
  hu->add_option("--om", om, "multiplicative system JSON");
  hu->callback([&] { action = [&](Runner& r) { return cmd_hulls(r, oa, om, strict); }; });

  std::string from, to, symbols;
  int summands = 2;
  auto* re = app.add_subcommand("reciprocity", "expand N_K^H(x_1 + ... + x_n)");
  re->add_option("--from", from, "K")->required();
  re->add_option("--to", to, "H")->required();
  re->add_option("--summands,-n", summands, "n")->capture_default_str();
  re->add_option("--symbols", symbols, "comma-separated names for the summands");
  re->callback([&] { action = [&](Runner& r) { return cmd_reciprocity(r, from, to, summands, symbols); }; });

  auto* bi = app.add_subcommand("bispan", "bispan operations");
  bi->require_subcommand(1, 1);
  std::string q_path, p_path;
  auto* bc = bi->add_subcommand("compose", "print Q ∘ P (apply P first)");
  bc->add_option("q", q_path, "Q (applied second)")->required();
  bc->add_option("p", p_path, "P (applied first)")->required();
  bc->callback([&] { action = [&](Runner& r) { return cmd_bispan_compose(r, q_path, p_path); }; });
  auto* bs = bi->add_subcommand("subgraph", "membership in the (O_a, O_m) subgraph; exit 2 if outside");
  bs->add_option("bispan", p_path, "bispan JSON")->required();
  bs->add_option("--oa", oa)->required();
  bs->add_option("--om", om)->required();
  bs->callback([&] { action = [&](Runner& r) { return cmd_bispan_subgraph(r, p_path, oa, om, strict); }; });
  int count = 1, max_orbits = 2;
  auto* bm = bi->add_subcommand("sample", "random bispans in the (O_a, O_m) subgraph");
  bm->add_option("--oa", oa)->required();
  bm->add_option("--om", om)->required();
  bm->add_option("--count", count)->capture_default_str();
  bm->add_option("--max-orbits", max_orbits)->capture_default_str();
  bm->callback([&] { action = [&](Runner& r) { return cmd_bispan_sample(r, oa, om, strict, count, max_orbits); }; });

  std::string system_path, level_arg;
  auto* bu = app.add_subcommand("burnside-table", "bases, products, restriction and transfer matrices");
  bu->alias("burnside");
  bu->add_option("--system", system_path, "transfer system JSON")->required();
  bu->add_option("--level", level_arg, "only this subgroup");
  bu->callback([&] { action = [&](Runner& r) { return cmd_burnside(r, system_path, strict, level_arg); }; });

  std::string spec_path;
  auto* un = app.add_subcommand("universe", "transfer systems of a universe or stabilizer datum");
  un->add_option("--spec", spec_path, "lambda or stabilizers JSON")->required();
  un->callback([&] { action = [&](Runner& r) { return cmd_universe(r, spec_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Runner runner(cfg);
  int status = 0;
  try {
    status = action(runner);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = runner.out.str();
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 1;
    }
  }
  return status;
}
