#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agu/geometry.hpp"

namespace agu {

struct PointClustering {
    std::vector<Point2D> centers;
    double radius = 0.0;
    std::vector<int> assignment;  // nearest-center index per clustered point
    std::size_t sample_count = 0;
    double alpha_bound = 0.0;  // approximation factor the run operates under
    std::vector<Point2D> summary_points;  // grid samples / composable summary, for figures
    std::vector<std::string> warnings;
};

/// max over pts of the distance to the nearest center.
double covering_radius(const std::vector<Point2D>& pts, const std::vector<Point2D>& centers);

struct ColoredPoint {
    Point2D point;
    int color = 0;  // source polygon index
};

/// Greedy farthest-point 2-approximation. Starts at points[seed_index];
/// k >= |points| returns every point with radius 0.
PointClustering gonzalez_kcenter(const std::vector<Point2D>& points, int k,
                                 std::size_t seed_index);

/// 1-center of polygons: the polygon point nearest the smallest enclosing
/// disk of all vertices (ties to the lowest polygon index) and the farthest
/// vertex distance as the radius; radius <= 2 * SED radius.
std::pair<Point2D, double> max_1center_polygons(const std::vector<Polygon2D>& polygons);

/// Grid-sampled k-center of convex polygons: Minkowski-dilated membership,
/// off-polygon grid vertices snapped to their nearest polygon, Gonzalez on
/// the in-domain samples.
PointClustering max_kcenter_convex(const std::vector<Polygon2D>& polygons, int k, double eps,
                                   std::size_t seed_index = 0);

/// Arbitrary simple polygons: triangulate, then run the convex machinery on
/// the triangles; centers mapped back onto the input polygons.
PointClustering max_kcenter_arbitrary(const std::vector<Polygon2D>& polygons, int k, double eps,
                                      std::size_t seed_index = 0);

/// Exact colorful k-center at desk scale (<= 8 colors): binary search over
/// pairwise distances, feasibility by exhaustive cover search over
/// candidates deduplicated by color-coverage bitmask.
PointClustering colorful_kcenter_exact(const std::vector<ColoredPoint>& points, int k);

/// Minimum k-center of at most 8 polygons: colored grid samples snapped
/// into the union, then the exact colorful solver.
PointClustering min_kcenter_polygons(const std::vector<Polygon2D>& polygons, int k, double eps);

/// Two-round composable k-center: round-robin partition, per-part Gonzalez,
/// Gonzalez again on the union of the per-part centers. 4-approximation;
/// sample_count reports the summary size.
PointClustering composable_kcenter(const std::vector<Point2D>& points, int k, int partitions,
                                   std::uint64_t seed);

}  // namespace agu
