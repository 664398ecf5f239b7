#pragma once

#include <utility>
#include <vector>

#include "agu/geometry.hpp"
#include "agu/interval_cover.hpp"

namespace agu {

enum class CoverMode { max, min };

struct SegmentInstance {
    std::vector<Segment2D> segments;
    int k = 1;
};

/// Candidate radii from discretizing the segments: the pairwise distances
/// of the sample points, sorted and deduplicated. `eps` records the step
/// actually used. Callers are responsible for normalizing the input and
/// clamping eps (see clamp_discretization_step).
struct RadiiSet {
    std::vector<double> radii;
    double eps = 0.0;
};

struct FrontierEntry {
    double radius = 0.0;  // tried radius, input units
    int cover_size = 0;
};

struct SegmentClustering {
    std::vector<int> center_indices;
    double radius = 0.0;  // achieved covering radius, input units
    CoverMode mode = CoverMode::max;
    std::vector<FrontierEntry> frontier;
    double selected_radius = 0.0;  // the accepted candidate radius
    int universe_atoms = 0;        // |U| of the instance at the accepted radius
    int cover_bound = 0;           // k * ceil(ln|U| + 1) at the accepted radius
};

/// The segment whose worst point-to-center distance over all segments is
/// smallest; exact in O(n^2) envelope evaluations. Ties go to the lowest
/// index.
std::pair<int, double> max_1center_segments(const std::vector<Segment2D>& segments);

/// The segment whose stadium has to grow least to touch every other
/// segment.
std::pair<int, double> min_1center_segments(const std::vector<Segment2D>& segments);

/// min(eps, d_min / 2) where d_min is the smallest positive pairwise
/// segment distance (O(n^2) scan); eps unchanged when every pair touches.
double clamp_discretization_step(const std::vector<Segment2D>& segments, double eps);

/// Sample each segment at arclength steps of eps (endpoints always
/// included); the radii are all distinct pairwise sample distances.
RadiiSet candidate_radii(const std::vector<Segment2D>& segments, double eps);

/// One radius of the covering reduction: set i collects, for every segment
/// j, the part of s_j inside the stadium of s_i, parametrized by arclength
/// on segment j's own copy of the line (segment j occupies
/// [j*(L+1), j*(L+1)+len_j] for L the maximum length).
std::pair<MultiIntervalInstance, CoverSolution>
reduce_max_to_cover(const std::vector<Segment2D>& segments, double r);

/// Min-cost variant: membership is all-or-nothing, set i collects whole
/// segments the stadium of s_i touches.
std::pair<MultiIntervalInstance, CoverSolution>
reduce_min_to_cover(const std::vector<Segment2D>& segments, double r);

/// Bicriteria k-center: try every candidate radius ascending, accept the
/// smallest one whose greedy cover uses at most k * ceil(ln|U| + 1) sets.
SegmentClustering max_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                       double eps);
SegmentClustering min_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                       double eps);

}  // namespace agu
