#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "agu/oracle.hpp"
#include "agu/segment_clustering.hpp"

using namespace agu;

namespace {

std::vector<Segment2D> three_parallel() {
    // two outer rails and the middle one that covers both at radius 1
    return {{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}, {{0, 1}, {1, 1}}};
}

std::vector<Segment2D> min_mode_instance() {
    return {{{0, 0}, {2, 0}}, {{0, 2}, {2, 2}}, {{1, 1}, {1, 1}}};
}

std::vector<Segment2D> random_segments(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Segment2D> out;
    for (std::size_t i = 0; i < n; ++i) {
        Segment2D s{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        if (rng() % 10 == 0) s.b = s.a;  // occasional degenerate segment
        out.push_back(s);
    }
    return out;
}

double smallest_radius_with_cover_size(const SegmentClustering& result, int size) {
    for (const auto& entry : result.frontier)
        if (entry.cover_size <= size) return entry.radius;
    return -1.0;
}

// max-mode feasibility: walking every segment finds no point farther than
// the claimed radius from all chosen centers
void check_max_feasibility(const std::vector<Segment2D>& segments,
                           const SegmentClustering& result) {
    std::vector<Segment2D> centers;
    for (int c : result.center_indices) centers.push_back(segments[static_cast<std::size_t>(c)]);
    const double step = std::max(result.radius / 100.0, 1e-4);
    for (const auto& s : segments) {
        const double len = s.length();
        const std::size_t n =
            std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / step)));
        for (std::size_t i = 0; i <= n; ++i) {
            const Point2D p = s.at(static_cast<double>(i) / static_cast<double>(n));
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& c : centers) nearest = std::min(nearest, point_segment_distance(p, c));
            CHECK(nearest <= result.radius * (1.0 + 1e-6) + 1e-12);
        }
    }
}

void check_min_feasibility(const std::vector<Segment2D>& segments,
                           const SegmentClustering& result) {
    for (const auto& s : segments) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int c : result.center_indices)
            nearest = std::min(nearest,
                               segment_min_distance(s, segments[static_cast<std::size_t>(c)]));
        CHECK(nearest <= result.radius * (1.0 + 1e-6) + 1e-12);
    }
}

}  // namespace

TEST_CASE("max 1-center of segments") {
    const std::vector<Segment2D> self{{{0, 0}, {1, 0}}};
    CHECK(max_1center_segments(self) == std::pair<int, double>{0, 0.0});

    const auto [idx, radius] = max_1center_segments(three_parallel());
    CHECK(idx == 2);
    CHECK(radius == doctest::Approx(1.0));
    // cross-check against the exhaustive sampling oracle
    const auto report = oracle::brute_kcenter_segments(three_parallel(), 1, CoverMode::max, 1e-3);
    CHECK(std::abs(radius - report.optimum) <= 2e-3);

    const std::vector<Segment2D> twins{{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}};
    const auto [twin_idx, twin_radius] = max_1center_segments(twins);
    CHECK(twin_idx == 0);
    CHECK(twin_radius == doctest::Approx(0.0));

    CHECK_THROWS(max_1center_segments({}));
}

TEST_CASE("min 1-center of segments") {
    const auto [idx, radius] = min_1center_segments(min_mode_instance());
    CHECK(idx == 2);
    CHECK(radius == doctest::Approx(1.0));
    const auto report = oracle::brute_kcenter_segments(min_mode_instance(), 1, CoverMode::min, 0);
    CHECK(report.optimum == doctest::Approx(1.0));

    // pairwise intersecting: radius 0
    const std::vector<Segment2D> cross{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{1, 0}, {1, 2}}};
    CHECK(min_1center_segments(cross).second == doctest::Approx(0.0));

    const std::vector<Segment2D> single{{{3, 3}, {4, 4}}};
    CHECK(min_1center_segments(single) == std::pair<int, double>{0, 0.0});
}

TEST_CASE("candidate radii from discretization") {
    const RadiiSet single = candidate_radii({{{0, 0}, {1, 0}}}, 0.5);
    REQUIRE(single.radii.size() == 2);
    CHECK(single.radii[0] == doctest::Approx(0.5));
    CHECK(single.radii[1] == doctest::Approx(1.0));

    const RadiiSet pair =
        candidate_radii({{{0, 0}, {0, 0}}, {{3, 4}, {3, 4}}}, 1.0);
    REQUIRE(pair.radii.size() == 1);
    CHECK(pair.radii[0] == doctest::Approx(5.0));

    const RadiiSet rails = candidate_radii({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}, 1.0);
    REQUIRE(rails.radii.size() == 2);
    CHECK(rails.radii[0] == doctest::Approx(1.0));
    CHECK(rails.radii[1] == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS(candidate_radii({{{0, 0}, {1, 0}}}, 0.0));
}

TEST_CASE("discretization step clamp") {
    // parallel rails at distance 1: step capped at d_min / 2
    CHECK(clamp_discretization_step({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}, 1.0) ==
          doctest::Approx(0.5));
    // intersecting pairs contribute no positive distance
    CHECK(clamp_discretization_step({{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}}, 0.3) ==
          doctest::Approx(0.3));
    CHECK(clamp_discretization_step({{{0, 0}, {1, 0}}}, 0.7) == doctest::Approx(0.7));
}

TEST_CASE("covering reduction, max mode") {
    SUBCASE("parallel rails at distance 1 collapse to one set at r = 1") {
        const std::vector<Segment2D> rails{{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
        const auto [inst, sol] = reduce_max_to_cover(rails, 1.0);
        CHECK(sol.chosen == std::vector<int>{0});
        // Q_0 covers both parameter lines entirely
        REQUIRE(inst.sets[0].size() == 2);
    }
    SUBCASE("radius zero forces every segment to cover itself") {
        const std::vector<Segment2D> spread{{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}, {{4, 4}, {5, 4}}};
        const auto [inst, sol] = reduce_max_to_cover(spread, 0.0);
        CHECK(sol.chosen.size() == 3);
    }
    SUBCASE("middle rail covers all three at r = 1") {
        const auto [inst, sol] = reduce_max_to_cover(three_parallel(), 1.0);
        CHECK(sol.chosen == std::vector<int>{2});
    }
}

TEST_CASE("covering reduction, min mode") {
    SUBCASE("pairwise intersecting at r = 0") {
        const std::vector<Segment2D> cross{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}};
        const auto [inst, sol] = reduce_min_to_cover(cross, 0.0);
        CHECK(sol.chosen.size() == 1);
    }
    SUBCASE("stadium of the point segment touches both rails at r = 1") {
        const auto [inst, sol] = reduce_min_to_cover(min_mode_instance(), 1.0);
        CHECK(sol.chosen == std::vector<int>{2});
    }
    SUBCASE("radius below all pairwise distances forces self-cover") {
        const std::vector<Segment2D> spread{{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}, {{4, 4}, {5, 4}}};
        const auto [inst, sol] = reduce_min_to_cover(spread, 0.1);
        CHECK(sol.chosen.size() == 3);
    }
}

TEST_CASE("k-center driver, max mode") {
    SUBCASE("k = 1 on the three rails stays within the bicriteria radius bound") {
        const auto result = max_kcenter_segments(three_parallel(), 1, 0.1);
        const auto report =
            oracle::brute_kcenter_segments(three_parallel(), 1, CoverMode::max, 1e-4);
        CHECK(result.radius <= 1.1 * (report.optimum + 2e-4));
        CHECK(static_cast<int>(result.center_indices.size()) <= result.cover_bound);
        check_max_feasibility(three_parallel(), result);
        // one center first suffices exactly at the optimal radius 1
        CHECK(smallest_radius_with_cover_size(result, 1) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("k = n covers everything at radius 0") {
        const std::vector<Segment2D> spread{{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}, {{4, 4}, {5, 4}}};
        const auto result = max_kcenter_segments(spread, 3, 0.1);
        CHECK(result.radius == doctest::Approx(0.0));
        CHECK(result.center_indices == std::vector<int>{0, 1, 2});
    }
    SUBCASE("single segment") {
        const auto result = max_kcenter_segments({{{0, 0}, {1, 0}}}, 1, 0.25);
        CHECK(result.center_indices == std::vector<int>{0});
        CHECK(result.radius == doctest::Approx(0.0));
    }
}

TEST_CASE("k-center driver, min mode") {
    SUBCASE("k = 1 on the min-mode instance") {
        const auto result = min_kcenter_segments(min_mode_instance(), 1, 0.1);
        const auto report =
            oracle::brute_kcenter_segments(min_mode_instance(), 1, CoverMode::min, 0);
        CHECK(result.radius <= 1.1 * report.optimum + 1e-9);
        CHECK(static_cast<int>(result.center_indices.size()) <= result.cover_bound);
        check_min_feasibility(min_mode_instance(), result);
        CHECK(smallest_radius_with_cover_size(result, 1) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("mutually intersecting segments: radius 0 for any k") {
        const std::vector<Segment2D> cross{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{1, 0}, {1, 2}}};
        for (int k = 1; k <= 3; ++k)
            CHECK(min_kcenter_segments(cross, k, 0.2).radius == doctest::Approx(0.0));
    }
}

TEST_CASE("driver invariants on random instances") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 15; ++round) {
        const auto segments = random_segments(rng, 2 + rng() % 5);
        const int k = 1 + static_cast<int>(rng() % 2);
        if (static_cast<std::size_t>(k) > segments.size()) continue;

        for (const CoverMode mode : {CoverMode::max, CoverMode::min}) {
            const auto result = mode == CoverMode::max
                                    ? max_kcenter_segments(segments, k, 0.1)
                                    : min_kcenter_segments(segments, k, 0.1);

            // frontier: cover size never increases as the radius grows
            for (std::size_t i = 1; i < result.frontier.size(); ++i)
                CHECK(result.frontier[i].cover_size <= result.frontier[i - 1].cover_size);

            CHECK(!result.center_indices.empty());
            CHECK(static_cast<int>(result.center_indices.size()) <= result.cover_bound);

            if (mode == CoverMode::max)
                check_max_feasibility(segments, result);
            else
                check_min_feasibility(segments, result);

            // bicriteria radius bound against the exhaustive oracle
            const auto report = oracle::brute_kcenter_segments(segments, k, mode, 1e-4);
            const double slack = mode == CoverMode::max ? 2e-4 : 0.0;
            CHECK(result.radius <= 1.1 * (report.optimum + slack) + 1e-9);
        }
    }
}

TEST_CASE("k = 1 driver tracks the exact 1-center bound") {
    std::mt19937 rng(311);
    for (int round = 0; round < 10; ++round) {
        const auto segments = random_segments(rng, 2 + rng() % 4);
        for (double eps : {0.05, 0.02}) {
            const auto max_result = max_kcenter_segments(segments, 1, eps);
            const auto [mi, max_r1] = max_1center_segments(segments);
            CHECK(max_result.radius <= (1.0 + eps) * max_r1 + 1e-9);

            const auto min_result = min_kcenter_segments(segments, 1, eps);
            const auto [ni, min_r1] = min_1center_segments(segments);
            CHECK(min_result.radius <= (1.0 + eps) * min_r1 + 1e-9);
        }
    }
}

TEST_CASE("identical inputs give identical outputs") {
    const auto a = max_kcenter_segments(three_parallel(), 1, 0.1);
    const auto b = max_kcenter_segments(three_parallel(), 1, 0.1);
    CHECK(a.center_indices == b.center_indices);
    CHECK(a.radius == b.radius);
    REQUIRE(a.frontier.size() == b.frontier.size());
    for (std::size_t i = 0; i < a.frontier.size(); ++i) {
        CHECK(a.frontier[i].radius == b.frontier[i].radius);
        CHECK(a.frontier[i].cover_size == b.frontier[i].cover_size);
    }
}

TEST_CASE("driver input validation") {
    CHECK_THROWS(max_kcenter_segments({}, 1, 0.1));
    CHECK_THROWS(max_kcenter_segments({{{0, 0}, {1, 0}}}, 0, 0.1));
    CHECK_THROWS(max_kcenter_segments({{{0, 0}, {1, 0}}}, 2, 0.1));
    CHECK_THROWS(max_kcenter_segments({{{0, 0}, {1, 0}}}, 1, -1.0));
}
