#pragma once

// JSON and text formats shared by the command-line tool and the tests.
// Integers and rationals are always strings ("num/den", den omitted when 1).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "udlab/constructions.hpp"
#include "udlab/counting.hpp"
#include "udlab/exponent_lab.hpp"
#include "udlab/lp_exponent.hpp"
#include "udlab/udgraph.hpp"

namespace udlab {

using Json = nlohmann::ordered_json;

Json to_json(const Direction& d);
Direction direction_from_json(const Json& j);

Json to_json(const SphereConfig& c);
SphereConfig sphere_config_from_json(const Json& j);

Json to_json(const PlanarScene& s);
PlanarScene planar_scene_from_json(const Json& j);

Json to_json(const BipartiteR3Config& c);
BipartiteR3Config bipartite_config_from_json(const Json& j);

/// "u v" per line, then the sidecar for vertex count, labels, antipodes, parts.
void write_edge_list(std::ostream& os, const UnitDistanceGraph& g);
Json graph_sidecar(const UnitDistanceGraph& g);
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::size_t, std::size_t>> read_edge_list(std::istream& is);
UnitDistanceGraph graph_from_files(std::istream& edges, const Json* sidecar);
/// Pattern graph G from an edge list; vertices are 0..max index.
RegularGraphSpec regular_graph_from_edge_list(std::istream& is);

Json to_json(const CountReport& r);
Json to_json(const ExponentFit& f);
Json to_json(const BoundRow& r);
Json to_json(const BoundTable& t);
Json to_json(const XiSweepReport& r);

/// Always "p/q", also for integers.
std::string fraction_string(const Rational& r);

}  // namespace udlab
