#include "udlab/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace udlab {

namespace {

Json str(const Rational& r)
{
    return to_string(r);
}

Json str(const BigInt& v)
{
    return to_string(v);
}

const char* const kRoles[] = {"free-q", "chain-q", "north", "south", "rich-free", "rich-adj", "closure"};

std::string role_name(PatternSlot::Role r)
{
    return kRoles[static_cast<int>(r)];
}

PatternSlot::Role parse_role(const std::string& s)
{
    for (int i = 0; i < 7; ++i)
        if (s == kRoles[i])
            return static_cast<PatternSlot::Role>(i);
    throw Error("unknown pattern role '" + s + "'");
}

Json index_or_null(const std::optional<std::size_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::optional<std::size_t> index_from(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<std::size_t>();
}

Json point_json(const R3Point& p)
{
    return Json::array({str(p.x), str(p.y), str(p.z)});
}

R3Point point_from(const Json& j)
{
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>()),
            parse_rational(j.at(2).get<std::string>())};
}

}  // namespace

std::string fraction_string(const Rational& r)
{
    return to_string(numerator(r)) + "/" + to_string(denominator(r));
}

Json to_json(const Direction& d)
{
    return Json::array({str(d.a()), str(d.b()), str(d.c())});
}

Direction direction_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 3)
        throw Error("a direction is an array of three integers");
    return Direction(parse_bigint(j[0].get<std::string>()), parse_bigint(j[1].get<std::string>()),
                     parse_bigint(j[2].get<std::string>()));
}

Json to_json(const SphereConfig& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["k"] = c.k;
    j["points"] = Json::array();
    for (const auto& p : c.points)
        j["points"].push_back(to_json(p));
    j["labels"] = Json::array();
    for (const auto& l : c.labels)
        j["labels"].push_back(l.to_string());
    j["circles"] = Json::array();
    for (const auto& m : c.circles)
        j["circles"].push_back(to_json(m));
    j["designated"] = Json::array();
    for (const auto& d : c.designated)
        j["designated"].push_back(index_or_null(d));
    j["closing"] = Json::array();
    for (const auto& d : c.closing)
        j["closing"].push_back(index_or_null(d));
    if (c.pattern) {
        Json p;
        p["closed"] = c.pattern->closed;
        p["slots"] = Json::array();
        for (const auto& s : c.pattern->slots) {
            Json slot{{"role", role_name(s.role)}, {"circle", s.circle}};
            if (s.closure_in_q)
                slot["closure_in_q"] = true;
            p["slots"].push_back(slot);
        }
        j["pattern"] = p;
    } else {
        j["pattern"] = nullptr;
    }
    j["rich_incidences"] = c.rich_incidences ? str(*c.rich_incidences) : Json(nullptr);
    return j;
}

SphereConfig sphere_config_from_json(const Json& j)
{
    SphereConfig c;
    c.kind = parse_construction_kind(j.at("kind").get<std::string>());
    c.k = j.value("k", 0);
    for (const auto& p : j.at("points"))
        c.points.push_back(direction_from_json(p));
    for (const auto& l : j.at("labels"))
        c.labels.push_back(PointLabel::parse(l.get<std::string>()));
    for (const auto& m : j.at("circles"))
        c.circles.push_back(direction_from_json(m));
    if (c.labels.size() != c.points.size())
        throw Error("config has " + std::to_string(c.points.size()) + " points but " +
                    std::to_string(c.labels.size()) + " labels");
    c.designated.resize(c.points.size());
    c.closing.resize(c.points.size());
    if (j.contains("designated"))
        for (std::size_t i = 0; i < j["designated"].size() && i < c.points.size(); ++i)
            c.designated[i] = index_from(j["designated"][i]);
    if (j.contains("closing"))
        for (std::size_t i = 0; i < j["closing"].size() && i < c.points.size(); ++i)
            c.closing[i] = index_from(j["closing"][i]);
    if (j.contains("pattern") && !j["pattern"].is_null()) {
        Pattern p;
        p.closed = j["pattern"].value("closed", false);
        for (const auto& s : j["pattern"].at("slots"))
            p.slots.push_back({parse_role(s.at("role").get<std::string>()), s.at("circle").get<int>(),
                               s.value("closure_in_q", false)});
        c.pattern = p;
    }
    if (j.contains("rich_incidences") && !j["rich_incidences"].is_null())
        c.rich_incidences = parse_bigint(j["rich_incidences"].get<std::string>());
    return c;
}

Json to_json(const PlanarScene& s)
{
    Json j;
    j["points"] = Json::array();
    for (const auto& p : s.points)
        j["points"].push_back(Json::array({str(p.x), str(p.y)}));
    j["lines"] = Json::array();
    for (const auto& l : s.lines)
        j["lines"].push_back(Json::array({str(l.a()), str(l.b()), str(l.c())}));
    return j;
}

PlanarScene planar_scene_from_json(const Json& j)
{
    PlanarScene s;
    for (const auto& p : j.at("points"))
        s.points.push_back({parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>())});
    for (const auto& l : j.at("lines"))
        s.lines.emplace_back(parse_rational(l.at(0).get<std::string>()), parse_rational(l.at(1).get<std::string>()),
                             parse_rational(l.at(2).get<std::string>()));
    return s;
}

Json to_json(const BipartiteR3Config& c)
{
    Json j;
    j["radius"] = str(c.radius);
    j["line_points"] = Json::array();
    for (const auto& p : c.line_points)
        j["line_points"].push_back(point_json(p));
    j["circle_points"] = Json::array();
    for (const auto& p : c.circle_points)
        j["circle_points"].push_back(point_json(p));
    j["prescribed_lengths"] = Json::array();
    for (const auto& row : c.prescribed_lengths) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(str(v));
        j["prescribed_lengths"].push_back(r);
    }
    return j;
}

BipartiteR3Config bipartite_config_from_json(const Json& j)
{
    BipartiteR3Config c;
    c.radius = parse_rational(j.at("radius").get<std::string>());
    for (const auto& p : j.at("line_points"))
        c.line_points.push_back(point_from(p));
    for (const auto& p : j.at("circle_points"))
        c.circle_points.push_back(point_from(p));
    for (const auto& row : j.at("prescribed_lengths")) {
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(parse_rational(v.get<std::string>()));
        c.prescribed_lengths.push_back(std::move(r));
    }
    return c;
}

void write_edge_list(std::ostream& os, const UnitDistanceGraph& g)
{
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
}

Json graph_sidecar(const UnitDistanceGraph& g)
{
    Json j;
    j["vertices"] = g.vertex_count();
    j["source"] = to_string(g.source());
    j["labels"] = g.labels();
    if (g.has_antipodal_data()) {
        j["antipodal_pairs"] = Json::array();
        for (auto [u, v] : g.antipodal_pairs())
            j["antipodal_pairs"].push_back(Json::array({u, v}));
    } else {
        j["antipodal_pairs"] = nullptr;
    }
    if (g.part_assignment()) {
        j["parts"] = *g.part_assignment();
        std::vector<std::size_t> ids(g.vertex_count());
        for (std::size_t v = 0; v < ids.size(); ++v)
            ids[v] = g.point_id(v);
        j["point_ids"] = ids;
    }
    return j;
}

std::vector<std::pair<std::size_t, std::size_t>> read_edge_list(std::istream& is)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        long long u, v;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0)
            throw Error("edge list line " + std::to_string(lineno) + ": expected two vertex indices, got '" + line +
                        "'");
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return edges;
}

UnitDistanceGraph graph_from_files(std::istream& edges_in, const Json* sidecar)
{
    auto edges = read_edge_list(edges_in);
    std::size_t n = 0;
    for (auto [u, v] : edges)
        n = std::max({n, u + 1, v + 1});
    GraphSource source = GraphSource::Abstract;
    if (sidecar) {
        const std::size_t declared = sidecar->at("vertices").get<std::size_t>();
        if (declared < n)
            throw Error("sidecar declares " + std::to_string(declared) + " vertices but the edge list uses " +
                        std::to_string(n));
        n = declared;
        if (sidecar->contains("source"))
            source = parse_graph_source(sidecar->at("source").get<std::string>());
    }
    UnitDistanceGraph g = UnitDistanceGraph::from_edges(n, edges, source);
    if (sidecar) {
        if (sidecar->contains("labels") && !sidecar->at("labels").empty())
            g.set_labels(sidecar->at("labels").get<std::vector<std::string>>());
        if (sidecar->contains("antipodal_pairs") && !sidecar->at("antipodal_pairs").is_null()) {
            std::vector<long> partner(n, -1);
            for (const auto& p : sidecar->at("antipodal_pairs")) {
                auto u = p.at(0).get<std::size_t>(), v = p.at(1).get<std::size_t>();
                if (u >= n || v >= n)
                    throw Error("antipodal pair out of range");
                partner[u] = static_cast<long>(v);
                partner[v] = static_cast<long>(u);
            }
            g.set_antipodes(std::move(partner));
        }
        if (sidecar->contains("parts"))
            g.set_parts(sidecar->at("parts").get<std::vector<std::size_t>>(),
                        sidecar->at("point_ids").get<std::vector<std::size_t>>());
    }
    return g;
}

RegularGraphSpec regular_graph_from_edge_list(std::istream& is)
{
    RegularGraphSpec G;
    for (auto [u, v] : read_edge_list(is)) {
        G.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        G.k = std::max({G.k, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
    }
    return G;
}

Json to_json(const CountReport& r)
{
    Json j;
    j["k"] = r.k;
    j["engine"] = to_string(r.engine);
    j["ordered_paths"] = str(r.ordered_paths);
    j["unordered_paths"] = str(r.unordered_paths);
    j["antipodal_free_unordered"] = r.antipodal_free_unordered ? str(*r.antipodal_free_unordered) : Json(nullptr);
    j["cycles"] = r.cycles_dihedral ? str(*r.cycles_dihedral) : Json(nullptr);
    return j;
}

Json to_json(const ExponentFit& f)
{
    return Json{{"slope", f.slope}, {"intercept", f.intercept}, {"max_residual", f.max_residual}, {"points", f.points}};
}

Json to_json(const BoundRow& r)
{
    return Json{{"quantity", r.quantity},
                {"k", r.k},
                {"lower", r.lower ? str(*r.lower) : Json(nullptr)},
                {"upper", str(r.upper)},
                {"polylog", r.polylog}};
}

Json to_json(const BoundTable& t)
{
    Json j = Json::array();
    for (const auto& r : t.rows)
        j.push_back(to_json(r));
    return j;
}

Json to_json(const XiSweepReport& r)
{
    Json j;
    j["k"] = r.k;
    j["bound"] = fraction_string(r.bound);
    j["max_xi"] = fraction_string(r.max_xi);
    j["argmax"] = Json{{"H", Json::parse(r.argmax_h_string)}, {"lambda", r.argmax_lambda}};
    j["pairs_checked"] = r.pairs_realizable;
    j["h_subsets"] = r.h_subsets;
    j["lp_solved"] = r.lp_solved;
    j["all_within_bound"] = r.all_within_bound;
    j["all_certified"] = r.all_certified;
    j["closed_form_always_feasible"] = r.closed_form_always_feasible;
    j["closed_form_within_bound"] = r.closed_form_within_bound;
    j["closed_form_equal_to_xi"] = r.closed_form_equal;
    j["stated_class_objective_mismatches"] = r.stated_objective_mismatch;
    j["derived_class_objective_mismatches"] = r.derived_objective_mismatch;
    j["constraint_waiver"] = "rows for vertices with lambda 0 are not imposed";
    auto findings = [](const std::vector<IdentityFinding>& v) {
        Json a = Json::array();
        for (const auto& f : v)
            a.push_back(Json{{"H", Json::parse(f.H)}, {"lambda", f.lambda}, {"detail", f.detail}});
        return a;
    };
    j["identity_findings"] = findings(r.identity_findings);
    j["identity_notes"] = findings(r.identity_notes);
    j["identity_notes_total"] = r.identity_notes_total;
    if (r.counterexample)
        j["counterexample"] = Json{{"H", Json::parse(r.counterexample->h_string())},
                                   {"lambda", r.counterexample->lambda}};
    j["ok"] = r.ok();
    return j;
}

}  // namespace udlab
