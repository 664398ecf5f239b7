#pragma once

#include <string>
#include <vector>

#include "agu/geometry.hpp"
#include "agu/interval_cover.hpp"
#include "agu/segment_clustering.hpp"

// Brute-force reference solvers. They deliberately re-derive their distance
// evaluations (sampling, local projections) instead of calling the closed
// forms they are used to check; only the plain geometric carriers are
// shared.

namespace agu::oracle {

struct OracleReport {
    double optimum = 0.0;
    std::string witness;
    long long search_space_size = 0;
    double resolution = 0.0;  // reported additive error bound, 0 when exact
};

/// Exhaustive set cover by subset size; at most 20 sets.
OracleReport brute_set_cover(const CoverInstance& ci);

/// Exhaustive k-subset search over center segments. Max mode costs come
/// from dense sampling at `resolution` (error bound <= 2 * resolution); min
/// mode is exact.
OracleReport brute_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                    CoverMode mode, double resolution);

/// Exhaustive k-subsets of the candidate centers against the given points.
OracleReport brute_kcenter_points(const std::vector<Point2D>& points, int k,
                                  const std::vector<Point2D>& candidate_centers);

/// Continuous polygon k-center up to grid error: candidate centers on a
/// grid of cell `grid_resolution` inside the polygons, evaluation points on
/// a twice-finer grid. Min mode covers one evaluation point per polygon.
OracleReport brute_polygon_kcenter(const std::vector<Polygon2D>& polygons, int k,
                                   double grid_resolution, CoverMode mode = CoverMode::max);

}  // namespace agu::oracle
