#include "doctest.h"

#include <sstream>

#include "udlab/serialize.hpp"

using namespace udlab;

TEST_CASE("rational and direction strings")
{
    CHECK(to_string(Rational(3, 1)) == "3");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(fraction_string(Rational(2)) == "2/1");
    Direction d(BigInt(1) << 70, -3, 0);
    CHECK(direction_from_json(to_json(d)) == d);
    CHECK(to_json(Direction(2, 4, 6)) == Json::array({"1", "2", "3"}));
    CHECK_THROWS_AS(direction_from_json(Json::array({"1", "2"})), Error);
}

TEST_CASE("sphere configurations round trip and count identically")
{
    for (const auto& cfg : {path_construction(5, 50), enhanced_path_construction(7, 200), cycle_construction(8, 80),
                            quadratic_c4_config(10)}) {
        const std::string text = to_json(cfg).dump();
        SphereConfig back = sphere_config_from_json(Json::parse(text));
        CHECK(back.points == cfg.points);
        CHECK(back.labels == cfg.labels);
        CHECK(back.circles == cfg.circles);
        CHECK(back.designated == cfg.designated);
        CHECK(back.closing == cfg.closing);
        CHECK(back.rich_incidences == cfg.rich_incidences);
        CHECK(to_json(back).dump() == text);
        CHECK(check_sphere_config(back).empty());

        const int k = static_cast<int>(cfg.pattern->slots.size());
        CHECK(count_pattern_paths(back, k) == count_pattern_paths(cfg, k));
        auto a = count_paths(build_sphere_graph(cfg), 4);
        auto b = count_paths(build_sphere_graph(back), 4);
        CHECK(a.ordered_paths == b.ordered_paths);
        CHECK(a.antipodal_free_unordered == b.antipodal_free_unordered);
    }
}

TEST_CASE("planar scenes and bipartite configurations round trip")
{
    auto s = grid_incidence_scene(3);
    auto back = planar_scene_from_json(Json::parse(to_json(s).dump()));
    CHECK(back.points == s.points);
    CHECK(back.lines == s.lines);
    CHECK(count_incidences(back) == 81);

    auto c = bipartite_r3_construction(6, 20, {0, 1, 2}, Rational(3, 2));
    auto cb = bipartite_config_from_json(Json::parse(to_json(c).dump()));
    CHECK(cb.line_points == c.line_points);
    CHECK(cb.circle_points == c.circle_points);
    CHECK(cb.prescribed_lengths == c.prescribed_lengths);
    CHECK(cb.radius == c.radius);
}

TEST_CASE("edge list export round trip")
{
    auto cfg = path_construction(5, 60);
    auto g = build_sphere_graph(cfg);
    std::stringstream edges;
    write_edge_list(edges, g);
    Json side = Json::parse(graph_sidecar(g).dump());
    auto back = graph_from_files(edges, &side);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.antipodal_pairs() == g.antipodal_pairs());
    CHECK(back.labels() == g.labels());
    CHECK(count_antipodal_free_paths(back, 5) == count_antipodal_free_paths(g, 5));

    // parts survive as well
    auto bip = bipartite_r3_construction(6, 12, {0, 1, 2}, 1);
    auto k33 = RegularGraphSpec::complete_bipartite(3, 3);
    auto mg = build_prescribed_graph(bip, k33);
    std::stringstream e2;
    write_edge_list(e2, mg);
    Json s2 = graph_sidecar(mg);
    CHECK(count_prescribed_copies(graph_from_files(e2, &s2), k33) == count_prescribed_copies(mg, k33));

    std::stringstream bad("0 1\n1 x\n");
    CHECK_THROWS_AS(read_edge_list(bad), Error);
    std::stringstream comments("# a comment\n\n0 1\n  1 2\n");
    CHECK(read_edge_list(comments).size() == 2);
    std::stringstream k4("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto G = regular_graph_from_edge_list(k4);
    CHECK(G.k == 4);
    CHECK(G.is_regular(3));
}

TEST_CASE("structured outputs are deterministic")
{
    auto r1 = to_json(verify_xi_bound(RegularGraphSpec::prism(), 1)).dump();
    auto r2 = to_json(verify_xi_bound(RegularGraphSpec::prism(), 3)).dump();
    CHECK(r1 == r2);
    auto k4 = to_json(verify_xi_bound(RegularGraphSpec::complete(4)));
    CHECK(k4["max_xi"] == "2/1");
    CHECK(k4["argmax"]["H"] == Json::array());
    CHECK(k4["argmax"]["lambda"] == Json::array({3, 3, 3, 3}));

    CHECK(to_json(path_construction(6, 90)).dump() == to_json(path_construction(6, 90)).dump());
    auto rep = to_json(count_paths(build_sphere_graph(quadratic_c4_config(10)), 4, CountOptions{Engine::Optimized, 0, true, true}));
    CHECK(rep["cycles"] == "28");
    CHECK(rep["engine"] == "optimized");

    auto row = to_json(*bound_table().find("sphere-cycle", 6));
    CHECK(row["lower"] == "2");
    CHECK(row["upper"] == "20/9");
}
