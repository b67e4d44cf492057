#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udlab/constructions.hpp"
#include "udlab/exact_geom.hpp"
#include "udlab/vertex_set.hpp"

namespace udlab {

enum class GraphSource { Sphere, R3Unit, R3Prescribed, Incidence, Abstract };

std::string to_string(GraphSource s);
GraphSource parse_graph_source(const std::string& s);

/// Simple undirected graph: bit-set adjacency plus side data for antipodal
/// pairs and multipartite counting. Immutable once built.
class UnitDistanceGraph {
public:
    UnitDistanceGraph() = default;
    explicit UnitDistanceGraph(std::size_t n, GraphSource source = GraphSource::Abstract);

    static UnitDistanceGraph from_edges(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                        GraphSource source = GraphSource::Abstract);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
    const std::vector<std::size_t>& neighbor_list(std::size_t v) const { return nbr_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    std::size_t degree(std::size_t v) const { return nbr_[v].size(); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    GraphSource source() const { return source_; }

    /// Antipodal side data; absent for graphs that did not come from sphere points.
    bool has_antipodal_data() const { return antipode_.has_value(); }
    /// Partner of v, or -1.
    long antipode(std::size_t v) const { return antipode_ ? (*antipode_)[v] : -1; }
    std::vector<std::pair<std::size_t, std::size_t>> antipodal_pairs() const;

    const std::optional<std::vector<std::size_t>>& part_assignment() const { return part_; }
    std::size_t part_count() const;
    /// Geometric point behind a vertex; vertices of different parts may share one.
    std::size_t point_id(std::size_t v) const { return point_ ? (*point_)[v] : v; }

    const std::vector<std::string>& labels() const { return labels_; }

    // Builder interface used by the graph constructors below.
    void add_edge(std::size_t u, std::size_t v);
    void set_antipodes(std::vector<long> partner);
    void set_parts(std::vector<std::size_t> part, std::vector<std::size_t> point_ids);
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::vector<std::size_t>> nbr_;
    GraphSource source_ = GraphSource::Abstract;
    std::optional<std::vector<long>> antipode_;
    std::optional<std::vector<std::size_t>> part_;
    std::optional<std::vector<std::size_t>> point_;
    std::vector<std::string> labels_;
};

/// Fixed pattern graph G on vertices 0..k-1.
struct RegularGraphSpec {
    int k = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    bool is_simple() const;
    bool is_regular(int d) const;
    /// 2-colouring of the vertices, if one exists.
    std::optional<std::vector<int>> bipartition() const;

    static RegularGraphSpec complete(int k);
    static RegularGraphSpec complete_bipartite(int a, int b);
    static RegularGraphSpec cycle(int k);
    /// C_3 x K_2.
    static RegularGraphSpec prism();
};

/// Edge iff the directions are orthogonal; antipodal pairs recorded.
UnitDistanceGraph build_sphere_graph(const SphereConfig& config);
UnitDistanceGraph build_sphere_graph(const std::vector<Direction>& points);
/// Bipartite graph: vertices are the points, then the lines.
UnitDistanceGraph build_incidence_graph(const PlanarScene& scene);
UnitDistanceGraph build_r3_graph(const std::vector<R3Point>& points, const Rational& squared_length);
/// Multipartite graph over the slots of G: line slots are the colour-0
/// vertices of G (one point each), circle slots the colour-1 vertices (every
/// circle point, duplicated per slot). Edges join G-adjacent slots whose
/// points realize the prescribed squared length.
UnitDistanceGraph build_prescribed_graph(const BipartiteR3Config& config, const RegularGraphSpec& g);

}  // namespace udlab
