#include "udlab/udgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace udlab {

std::string to_string(GraphSource s)
{
    switch (s) {
    case GraphSource::Sphere:
        return "sphere";
    case GraphSource::R3Unit:
        return "r3-unit";
    case GraphSource::R3Prescribed:
        return "r3-prescribed";
    case GraphSource::Incidence:
        return "incidence";
    case GraphSource::Abstract:
        return "abstract";
    }
    return "?";
}

GraphSource parse_graph_source(const std::string& s)
{
    for (auto g : {GraphSource::Sphere, GraphSource::R3Unit, GraphSource::R3Prescribed,
                   GraphSource::Incidence, GraphSource::Abstract})
        if (to_string(g) == s)
            return g;
    throw Error("unknown graph source '" + s + "'");
}

UnitDistanceGraph::UnitDistanceGraph(std::size_t n, GraphSource source)
    : adj_(n, VertexSet(n)), nbr_(n), source_(source)
{
}

UnitDistanceGraph UnitDistanceGraph::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, GraphSource source)
{
    UnitDistanceGraph g(n, source);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void UnitDistanceGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= vertex_count() || v >= vertex_count())
        throw Error("edge endpoint out of range");
    if (u == v)
        throw Error("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v))
        return;
    adj_[u].set(v);
    adj_[v].set(u);
    nbr_[u].push_back(v);
    nbr_[v].push_back(u);
}

std::size_t UnitDistanceGraph::edge_count() const
{
    std::size_t d = 0;
    for (const auto& l : nbr_)
        d += l.size();
    return d / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> UnitDistanceGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        adj_[u].for_each([&](std::size_t v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

void UnitDistanceGraph::set_antipodes(std::vector<long> partner)
{
    if (partner.size() != vertex_count())
        throw Error("antipode table has the wrong size");
    for (std::size_t v = 0; v < partner.size(); ++v) {
        long w = partner[v];
        if (w < 0)
            continue;
        if (static_cast<std::size_t>(w) >= partner.size() || partner[w] != static_cast<long>(v))
            throw Error("antipode table is not an involution");
        if (adjacent(v, w))
            throw Error("antipodal vertices cannot be adjacent");
    }
    antipode_ = std::move(partner);
}

std::vector<std::pair<std::size_t, std::size_t>> UnitDistanceGraph::antipodal_pairs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (!antipode_)
        return out;
    for (std::size_t v = 0; v < antipode_->size(); ++v)
        if ((*antipode_)[v] > static_cast<long>(v))
            out.emplace_back(v, (*antipode_)[v]);
    return out;
}

void UnitDistanceGraph::set_parts(std::vector<std::size_t> part, std::vector<std::size_t> point_ids)
{
    if (part.size() != vertex_count() || point_ids.size() != vertex_count())
        throw Error("part table has the wrong size");
    part_ = std::move(part);
    point_ = std::move(point_ids);
}

std::size_t UnitDistanceGraph::part_count() const
{
    if (!part_)
        return 0;
    std::size_t c = 0;
    for (auto p : *part_)
        c = std::max(c, p + 1);
    return c;
}

// ---------------------------------------------------------------------------

std::vector<int> RegularGraphSpec::degrees() const
{
    std::vector<int> d(k, 0);
    for (auto [u, v] : edges) {
        ++d.at(u);
        ++d.at(v);
    }
    return d;
}

bool RegularGraphSpec::is_simple() const
{
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= k || v >= k)
            return false;
        if (!seen.insert(std::minmax(u, v)).second)
            return false;
    }
    return true;
}

bool RegularGraphSpec::is_regular(int d) const
{
    if (!is_simple())
        return false;
    auto deg = degrees();
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

std::optional<std::vector<int>> RegularGraphSpec::bipartition() const
{
    std::vector<std::vector<int>> nb(k);
    for (auto [u, v] : edges) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    std::vector<int> color(k, -1);
    for (int s = 0; s < k; ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : nb[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

RegularGraphSpec RegularGraphSpec::complete(int k)
{
    RegularGraphSpec g{k, {}};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.edges.emplace_back(i, j);
    return g;
}

RegularGraphSpec RegularGraphSpec::complete_bipartite(int a, int b)
{
    RegularGraphSpec g{a + b, {}};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.edges.emplace_back(i, a + j);
    return g;
}

RegularGraphSpec RegularGraphSpec::cycle(int k)
{
    RegularGraphSpec g{k, {}};
    for (int i = 0; i < k; ++i)
        g.edges.emplace_back(i, (i + 1) % k);
    return g;
}

RegularGraphSpec RegularGraphSpec::prism()
{
    return {6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}};
}

// ---------------------------------------------------------------------------

namespace {

// Coordinates below 2^30 let the dot product run in 64-bit arithmetic.
struct SmallTriple {
    std::int64_t v[3];
};

std::optional<SmallTriple> small(const Direction& d)
{
    static const BigInt limit = BigInt(1) << 30;
    SmallTriple t{};
    for (int i = 0; i < 3; ++i) {
        if (abs(d.coords()[i]) >= limit)
            return std::nullopt;
        t.v[i] = d.coords()[i].convert_to<std::int64_t>();
    }
    return t;
}

}  // namespace

UnitDistanceGraph build_sphere_graph(const std::vector<Direction>& points)
{
    const std::size_t n = points.size();
    std::map<Direction, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(points[i], i).second)
            throw Error("duplicate point " + points[i].to_string());

    std::vector<std::optional<SmallTriple>> fast(n);
    for (std::size_t i = 0; i < n; ++i)
        fast[i] = small(points[i]);

    UnitDistanceGraph g(n, GraphSource::Sphere);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool orth;
            if (fast[i] && fast[j]) {
                const auto& a = fast[i]->v;
                const auto& b = fast[j]->v;
                orth = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] == 0;
            } else {
                orth = is_unit_distance_sphere(points[i], points[j]);
            }
            if (orth)
                g.add_edge(i, j);
        }
    }
    std::vector<long> partner(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = index.find(-points[i]);
        if (it != index.end())
            partner[i] = static_cast<long>(it->second);
    }
    g.set_antipodes(std::move(partner));
    return g;
}

UnitDistanceGraph build_sphere_graph(const SphereConfig& config)
{
    UnitDistanceGraph g = build_sphere_graph(config.points);
    std::vector<std::string> labels;
    for (const auto& l : config.labels)
        labels.push_back(l.to_string());
    g.set_labels(std::move(labels));
    return g;
}

UnitDistanceGraph build_incidence_graph(const PlanarScene& scene)
{
    const std::size_t np = scene.points.size();
    UnitDistanceGraph g(np + scene.lines.size(), GraphSource::Incidence);
    for (std::size_t l = 0; l < scene.lines.size(); ++l)
        for (std::size_t p = 0; p < np; ++p)
            if (scene.lines[l].contains(scene.points[p]))
                g.add_edge(p, np + l);
    std::vector<std::size_t> part(g.vertex_count()), ids(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        part[v] = v < np ? 0 : 1;
        ids[v] = v;
    }
    g.set_parts(std::move(part), std::move(ids));
    return g;
}

UnitDistanceGraph build_r3_graph(const std::vector<R3Point>& points, const Rational& squared_length)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw Error("duplicate point in R3 point set");
    UnitDistanceGraph g(points.size(), GraphSource::R3Unit);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (squared_distance_r3(points[i], points[j]) == squared_length)
                g.add_edge(i, j);
    return g;
}

UnitDistanceGraph build_prescribed_graph(const BipartiteR3Config& config, const RegularGraphSpec& g)
{
    if (!g.is_simple())
        throw Error("pattern graph is not simple");
    auto color = g.bipartition();
    if (!color)
        throw Error("pattern graph is not bipartite");
    std::vector<int> line_slot_of(g.k, -1), circle_slot_of(g.k, -1);
    int lines = 0, circles = 0;
    for (int v = 0; v < g.k; ++v) {
        if ((*color)[v] == 0)
            line_slot_of[v] = lines++;
        else
            circle_slot_of[v] = circles++;
    }
    if (static_cast<std::size_t>(lines) != config.line_points.size() ||
        config.prescribed_lengths.size() != config.line_points.size() ||
        std::any_of(config.prescribed_lengths.begin(), config.prescribed_lengths.end(),
                    [&](const auto& row) { return row.size() != static_cast<std::size_t>(circles); }))
        throw Error("pattern graph parts do not match the configuration slots");

    // Part v of G: one vertex for a line slot, one per circle point otherwise.
    const std::size_t c = config.circle_points.size();
    std::vector<std::size_t> first(g.k);
    std::size_t total = 0;
    for (int v = 0; v < g.k; ++v) {
        first[v] = total;
        total += line_slot_of[v] >= 0 ? 1 : c;
    }
    UnitDistanceGraph out(total, GraphSource::R3Prescribed);
    std::vector<std::size_t> part(total), ids(total);
    for (int v = 0; v < g.k; ++v) {
        if (line_slot_of[v] >= 0) {
            part[first[v]] = v;
            ids[first[v]] = line_slot_of[v];
        } else {
            for (std::size_t j = 0; j < c; ++j) {
                part[first[v] + j] = v;
                ids[first[v] + j] = config.line_points.size() + j;
            }
        }
    }
    for (auto [a, b] : g.edges) {
        int lv = line_slot_of[a] >= 0 ? a : b;
        int cv = lv == a ? b : a;
        const auto& lp = config.line_points[line_slot_of[lv]];
        const Rational& want = config.prescribed_lengths[line_slot_of[lv]][circle_slot_of[cv]];
        for (std::size_t j = 0; j < c; ++j)
            if (squared_distance_r3(lp, config.circle_points[j]) == want)
                out.add_edge(first[lv], first[cv] + j);
    }
    out.set_parts(std::move(part), std::move(ids));
    return out;
}

}  // namespace udlab
