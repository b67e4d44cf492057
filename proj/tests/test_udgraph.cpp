#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "udlab/udgraph.hpp"

using namespace udlab;

TEST_CASE("sphere graph basics")
{
    auto tri = build_sphere_graph(std::vector<Direction>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.antipodal_pairs().empty());

    auto pair = build_sphere_graph(std::vector<Direction>{{1, 0, 0}, {-1, 0, 0}});
    CHECK(pair.edge_count() == 0);
    CHECK(pair.antipodal_pairs().size() == 1);

    CHECK_THROWS_AS(build_sphere_graph(std::vector<Direction>{{1, 0, 0}, {2, 0, 0}}), Error);
}

TEST_CASE("quadratic configuration graph")
{
    auto cfg = quadratic_c4_config(5);
    auto g = build_sphere_graph(cfg);
    CHECK(g.vertex_count() == 5);
    auto a = oracle::sphere_adjacency(cfg.points);
    std::size_t brute_edges = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            brute_edges += a[i][j];
            CHECK(g.adjacent(i, j) == bool(a[i][j]));
        }
    CHECK(g.edge_count() == brute_edges);
    CHECK(g.edge_count() == 6);  // K_{2,3}
    CHECK(g.antipodal_pairs().size() == 1);
    CHECK(g.labels().size() == 5);
}

TEST_CASE("sphere graph agrees with raw dot products (random)")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 40; ++it) {
        std::set<Direction> pts;
        while (pts.size() < 25) {
            int x = c(rng), y = c(rng), z = c(rng);
            if (x || y || z)
                pts.insert(Direction(x, y, z));
        }
        std::vector<Direction> v(pts.begin(), pts.end());
        auto g = build_sphere_graph(v);
        auto a = oracle::sphere_adjacency(v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK_FALSE(g.adjacent(i, i));
            for (std::size_t j = 0; j < v.size(); ++j)
                CHECK(g.adjacent(i, j) == bool(a[i][j]));
        }
        for (auto [p, q] : g.antipodal_pairs()) {
            CHECK(is_antipodal(v[p], v[q]));
            CHECK_FALSE(g.adjacent(p, q));
        }
        std::size_t brute_pairs = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                brute_pairs += is_antipodal(v[i], v[j]);
        CHECK(g.antipodal_pairs().size() == brute_pairs);
    }
}

TEST_CASE("large coordinates take the exact path")
{
    BigInt big = BigInt(1) << 80;
    std::vector<Direction> v{{big, 1, 0}, {-1, big, 7}, {0, 0, 1}, {1, 0, 0}};
    auto g = build_sphere_graph(v);
    auto a = oracle::sphere_adjacency(v);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            CHECK(g.adjacent(i, j) == bool(a[i][j]));
}

TEST_CASE("incidence graph")
{
    CHECK(build_incidence_graph(grid_incidence_scene(1)).edge_count() == 1);
    CHECK(build_incidence_graph(grid_incidence_scene(2)).edge_count() == 16);
    PlanarScene parallel{{{0, 0}, {1, 0}}, {PlanarLine(0, 1, -1)}};
    CHECK(build_incidence_graph(parallel).edge_count() == 0);
}

TEST_CASE("incidence graph equals the cross part of the lifted sphere graph")
{
    for (int N = 1; N <= 3; ++N) {
        auto scene = grid_incidence_scene(N);
        auto inc = build_incidence_graph(scene);
        auto sph = build_sphere_graph(lift_scene(scene));
        const std::size_t np = scene.points.size();
        REQUIRE(inc.vertex_count() == sph.vertex_count());
        for (std::size_t p = 0; p < np; ++p)
            for (std::size_t l = np; l < inc.vertex_count(); ++l)
                CHECK(inc.adjacent(p, l) == sph.adjacent(p, l));
        // bipartite between points and lines
        for (auto [u, v] : inc.edges())
            CHECK((u < np) != (v < np));
    }
}

TEST_CASE("R3 graphs")
{
    // regular tetrahedron with squared edge 8
    std::vector<R3Point> tet{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    CHECK(build_r3_graph(tet, 8).edge_count() == 6);

    std::vector<R3Point> line{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
    auto g = build_r3_graph(line, 1);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.adjacent(0, 2));

    auto cfg = bipartite_r3_construction(2, 5, {0}, 1);
    std::vector<R3Point> pts = cfg.line_points;
    pts.insert(pts.end(), cfg.circle_points.begin(), cfg.circle_points.end());
    auto star = build_r3_graph(pts, 1);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(0) == 4);
}

TEST_CASE("prescribed multipartite graph")
{
    auto star_cfg = bipartite_r3_construction(2, 5, {0}, 1);
    auto star = build_prescribed_graph(star_cfg, RegularGraphSpec::complete_bipartite(1, 1));
    CHECK(star.part_count() == 2);
    CHECK(star.degree(0) == 4);

    auto cfg = bipartite_r3_construction(4, 10, {0, 1}, 1);
    auto G = RegularGraphSpec::complete_bipartite(2, 2);
    auto mg = build_prescribed_graph(cfg, G);
    CHECK(mg.part_count() == 4);
    CHECK(mg.edge_count() == 4 * cfg.circle_points.size());

    auto wrong = cfg;
    wrong.prescribed_lengths[0] = {5, 5};
    wrong.prescribed_lengths[1] = {5, 5};
    CHECK(build_prescribed_graph(wrong, G).edge_count() == 0);

    CHECK_THROWS_AS(build_prescribed_graph(cfg, RegularGraphSpec::complete(4)), Error);
}

TEST_CASE("pattern graph helpers")
{
    CHECK(RegularGraphSpec::complete(4).is_regular(3));
    CHECK(RegularGraphSpec::complete_bipartite(3, 3).is_regular(3));
    CHECK(RegularGraphSpec::prism().is_regular(3));
    CHECK_FALSE(RegularGraphSpec::prism().bipartition().has_value());
    CHECK(RegularGraphSpec::cycle(6).bipartition().has_value());
    RegularGraphSpec loop{2, {{0, 0}}};
    CHECK_FALSE(loop.is_simple());
    CHECK(parse_graph_source(to_string(GraphSource::Incidence)) == GraphSource::Incidence);
}
