#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "agu/io.hpp"

using namespace agu;
using io::json;

TEST_CASE("geometry documents round-trip") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> coord(-1e3, 1e3);
    for (int round = 0; round < 200; ++round) {
        const Segment2D s{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        const Segment2D back = io::segment_from_json(json::parse(io::to_json(s).dump()));
        CHECK(back.a.x == s.a.x);  // shortest round-trip decimals are exact
        CHECK(back.b.y == s.b.y);
    }

    const Polygon2D poly = Polygon2D::from_ring({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
    const Polygon2D back = io::polygon_from_json(json::parse(io::to_json(poly).dump()));
    REQUIRE(back.vertices.size() == poly.vertices.size());
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        CHECK(back.vertices[i].x == poly.vertices[i].x);
        CHECK(back.vertices[i].y == poly.vertices[i].y);
    }
}

TEST_CASE("malformed geometry documents are rejected") {
    CHECK_THROWS(io::point_from_json(json::parse("[1]")));
    CHECK_THROWS(io::point_from_json(json::parse("[1, \"a\"]")));
    CHECK_THROWS(io::segment_from_json(json::parse("{\"a\":[0,0]}")));
    CHECK_THROWS(io::polygon_from_json(json::parse("{\"ring\":\"no\"}")));
    // non-finite coordinates violate the carrier invariants
    json inf_point = json::array();
    inf_point.push_back(std::numeric_limits<double>::infinity());
    inf_point.push_back(0.0);
    CHECK_THROWS(io::point_from_json(inf_point));
}

TEST_CASE("instance documents") {
    const auto inst = io::instance_from_json(json::parse(R"({"sets":[[[0,2]],[[1,3],[4,5]]]})"));
    REQUIRE(inst.sets.size() == 2);
    CHECK(inst.sets[1][1].lo == 4.0);
    CHECK_THROWS(io::instance_from_json(json::parse(R"({"sets":[[[2,1]]]})")));
    CHECK_THROWS(io::instance_from_json(json::parse(R"({"nope":1})")));

    const json round = io::instance_to_json(inst);
    const auto again = io::instance_from_json(round);
    CHECK(again.sets[0][0].hi == 2.0);
}

TEST_CASE("result documents carry the documented fields") {
    SegmentClustering sc;
    sc.center_indices = {0, 2};
    sc.radius = 1.5;
    sc.mode = CoverMode::max;
    sc.frontier = {{0.5, 3}, {1.5, 1}};
    const json with = io::segment_clustering_to_json(sc, true);
    CHECK(with.at("centers") == json::array({0, 2}));
    CHECK(with.at("mode") == "max");
    CHECK(with.at("frontier").size() == 2);
    const json without = io::segment_clustering_to_json(sc, false);
    CHECK_FALSE(without.contains("frontier"));

    PointClustering pc;
    pc.centers = {{1, 2}};
    pc.radius = 0.25;
    pc.sample_count = 7;
    pc.alpha_bound = 2.2;
    const json pj = io::point_clustering_to_json(pc);
    CHECK(pj.at("samples") == 7);
    CHECK(pj.at("centers")[0][0] == 1.0);
    CHECK(pj.at("alpha_bound") == 2.2);

    CoverSolution sol;
    sol.chosen = {1, 0};
    const json cj = io::cover_solution_to_json(sol, 5);
    CHECK(cj.at("atoms") == 5);
    CHECK(cj.at("greedy_bound").get<double>() == doctest::Approx(std::log(5.0) + 1.0));
}

TEST_CASE("file round-trip") {
    const json j{{"hello", 1}};
    io::write_json_file("/tmp/agu_io_test.json", j);
    CHECK(io::read_json_file("/tmp/agu_io_test.json") == j);
    CHECK_THROWS(io::read_json_file("/tmp/agu_does_not_exist.json"));
}
