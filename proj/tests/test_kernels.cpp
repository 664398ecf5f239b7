#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "agu/kernels.hpp"

using namespace agu::kernels;

namespace {

struct Arrays {
    std::vector<double> xs, ys, best2;
    std::vector<int> owner;
};

Arrays random_arrays(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    Arrays a;
    a.xs.resize(n);
    a.ys.resize(n);
    a.best2.assign(n, std::numeric_limits<double>::infinity());
    a.owner.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        a.xs[i] = coord(rng);
        a.ys[i] = coord(rng);
    }
    return a;
}

const std::vector<std::size_t> kSizes{0, 1, 2, 3, 4, 5, 7, 8, 15, 64, 1001};

}  // namespace

TEST_CASE("avx2 variants match the scalar reference bit for bit") {
    if (!backend_supported(Backend::avx2)) {
        MESSAGE("avx2 not available; skipping equivalence checks");
        return;
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);

    for (std::size_t n : kSizes) {
        Arrays scalar_arrays = random_arrays(n, static_cast<std::uint32_t>(n) + 1);
        Arrays avx_arrays = scalar_arrays;

        for (int round = 0; round < 4; ++round) {
            const double cx = coord(rng), cy = coord(rng);
            const SegmentLite seg = make_segment_lite(coord(rng), coord(rng), coord(rng),
                                                      coord(rng));
            force_backend(Backend::scalar);
            min_dist2_point_idx(scalar_arrays.xs.data(), scalar_arrays.ys.data(), n, cx, cy,
                                round, scalar_arrays.best2.data(), scalar_arrays.owner.data());
            min_dist2_segment(scalar_arrays.xs.data(), scalar_arrays.ys.data(), n, seg,
                              scalar_arrays.best2.data());
            const double s_max = max_value(scalar_arrays.best2.data(), n);
            const double s_min = min_value(scalar_arrays.best2.data(), n);
            const std::size_t s_arg = n > 0 ? argmax(scalar_arrays.best2.data(), n) : 0;

            force_backend(Backend::avx2);
            min_dist2_point_idx(avx_arrays.xs.data(), avx_arrays.ys.data(), n, cx, cy, round,
                                avx_arrays.best2.data(), avx_arrays.owner.data());
            min_dist2_segment(avx_arrays.xs.data(), avx_arrays.ys.data(), n, seg,
                              avx_arrays.best2.data());
            const double v_max = max_value(avx_arrays.best2.data(), n);
            const double v_min = min_value(avx_arrays.best2.data(), n);
            const std::size_t v_arg = n > 0 ? argmax(avx_arrays.best2.data(), n) : 0;

            for (std::size_t i = 0; i < n; ++i) {
                CHECK(scalar_arrays.best2[i] == avx_arrays.best2[i]);
                CHECK(scalar_arrays.owner[i] == avx_arrays.owner[i]);
            }
            CHECK(s_max == v_max);
            CHECK(s_min == v_min);
            CHECK(s_arg == v_arg);
        }
    }
    reset_backend();
}

TEST_CASE("min_dist2_point computes squared euclidean distances") {
    force_backend(Backend::scalar);
    std::vector<double> xs{0.0, 3.0, -1.0};
    std::vector<double> ys{0.0, 4.0, 1.0};
    std::vector<double> best2(3, std::numeric_limits<double>::infinity());
    min_dist2_point(xs.data(), ys.data(), 3, 0.0, 0.0, best2.data());
    CHECK(best2[0] == doctest::Approx(0.0));
    CHECK(best2[1] == doctest::Approx(25.0));
    CHECK(best2[2] == doctest::Approx(2.0));
    // second center only improves where closer
    min_dist2_point(xs.data(), ys.data(), 3, 3.0, 4.0, best2.data());
    CHECK(best2[0] == doctest::Approx(0.0));
    CHECK(best2[1] == doctest::Approx(0.0));
    CHECK(best2[2] == doctest::Approx(2.0));
    reset_backend();
}

TEST_CASE("min_dist2_segment clamps to the segment") {
    force_backend(Backend::scalar);
    const SegmentLite seg = make_segment_lite(0.0, 0.0, 4.0, 0.0);
    std::vector<double> xs{2.0, 5.0, -1.0};
    std::vector<double> ys{1.0, 0.0, 0.0};
    std::vector<double> best2(3, std::numeric_limits<double>::infinity());
    min_dist2_segment(xs.data(), ys.data(), 3, seg, best2.data());
    CHECK(best2[0] == doctest::Approx(1.0));
    CHECK(best2[1] == doctest::Approx(1.0));
    CHECK(best2[2] == doctest::Approx(1.0));
    reset_backend();
}

TEST_CASE("degenerate segment behaves as a point") {
    force_backend(Backend::scalar);
    const SegmentLite seg = make_segment_lite(1.0, 1.0, 1.0, 1.0);
    std::vector<double> xs{4.0};
    std::vector<double> ys{5.0};
    std::vector<double> best2{std::numeric_limits<double>::infinity()};
    min_dist2_segment(xs.data(), ys.data(), 1, seg, best2.data());
    CHECK(best2[0] == doctest::Approx(25.0));
    reset_backend();
}

TEST_CASE("argmax returns the lowest index on ties") {
    for (Backend b : {Backend::scalar, Backend::avx2}) {
        if (!backend_supported(b)) continue;
        force_backend(b);
        std::vector<double> v{1.0, 7.0, 7.0, 3.0, 7.0};
        CHECK(argmax(v.data(), v.size()) == 1);
        std::vector<double> all_same(9, 2.5);
        CHECK(argmax(all_same.data(), all_same.size()) == 0);
    }
    reset_backend();
}

TEST_CASE("owner keeps the first center on distance ties") {
    for (Backend b : {Backend::scalar, Backend::avx2}) {
        if (!backend_supported(b)) continue;
        force_backend(b);
        std::vector<double> xs{0.0};
        std::vector<double> ys{0.0};
        std::vector<double> best2{std::numeric_limits<double>::infinity()};
        std::vector<int> owner{-1};
        min_dist2_point_idx(xs.data(), ys.data(), 1, 1.0, 0.0, 0, best2.data(), owner.data());
        min_dist2_point_idx(xs.data(), ys.data(), 1, -1.0, 0.0, 1, best2.data(), owner.data());
        CHECK(owner[0] == 0);
    }
    reset_backend();
}
