#pragma once

#include <string>

#include "bipoly/bispan.hpp"
#include "bipoly/burnside.hpp"
#include "bipoly/reciprocity.hpp"
#include "bipoly/universe.hpp"
#include "json.hpp"

namespace bipoly::io {

using nlohmann::json;

/// {"name": str, "cayley": [[int]]} or {"name": str, "permutations": [[int]]}.
Group parse_group(const json& j, int order_cap);
/// A builtin name, or a path to a JSON group spec.
Group load_group(const std::string& spec, int order_cap);
json read_json_file(const std::string& path);

/// Subgroup by index or label ("e", "C_2", "C2" and the like).
int parse_subgroup(const Lattice& lat, const json& j);
int parse_subgroup(const Lattice& lat, const std::string& text);
inline int parse_subgroup(const Lattice& lat, const char* text) { return parse_subgroup(lat, std::string(text)); }

/// {"group": name, "orbits": [subgroup-index, ...]}; "group" optional.
GSet parse_gset(const LatticePtr& lat, const json& j);
/// The relabelling of x onto gset_from_orbit_types of its orbit stabilizers.
GMap canonical_iso(const GSet& x);
json to_json(const GSet& x);  // requires canonical numbering

/// {"source": GSet, "target": GSet, "points": [int]}
GMap parse_gmap(const LatticePtr& lat, const json& j);
json to_json(const GMap& f);

/// {"group": name, "edges": [[k, h], ...]}; closed on load unless strict.
TransferSystem parse_system(const LatticePtr& lat, const json& j, bool strict);
json to_json(const TransferSystem& o);

/// {"group": name, "f": GMap, "g": GMap, "h": GMap}
Bispan parse_bispan(const LatticePtr& lat, const json& j);
/// The same class with every set renumbered canonically.
Bispan canonical(const Bispan& p);
json to_json(const Bispan& p);
std::string describe(const Bispan& p);

json to_json(const CompatReport& r);
json to_json(const PairCensus& c);
json to_json(const Formula& f);

/// {"group": name, "lambda": [...]} or {"group": name, "stabilizers": {"H": [K, ...]}}.
bool is_lambda_spec(const json& j);
PermUniverse parse_universe(const LatticePtr& lat, const json& j);
StabilizerDatum parse_datum(const LatticePtr& lat, const json& j);

/// Text label of the orbit H/K: "C_4/e".
std::string orbit_label(const Lattice& lat, int acting, int k);
std::string gset_label(const GSet& x);

}  // namespace bipoly::io
