#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace agu {

// Absolute tolerance for membership / boundary predicates.
inline constexpr double kTol = 1e-9;

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

double point_distance(const Point2D& a, const Point2D& b);
double point_distance2(const Point2D& a, const Point2D& b);

struct Segment2D {
    Point2D a;
    Point2D b;

    double length() const;
    bool is_degenerate() const { return a.x == b.x && a.y == b.y; }
    Point2D at(double t) const {  // a + t (b - a)
        return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
};

/// Simple polygon stored as a CCW ring without consecutive duplicates.
/// One- and two-vertex rings are legal and model points and segments.
struct Polygon2D {
    std::vector<Point2D> vertices;

    /// Normalizes a raw ring: drops an explicit closing vertex, rejects
    /// consecutive duplicates and non-finite coordinates, orients CCW.
    static Polygon2D from_ring(std::vector<Point2D> ring);

    bool is_degenerate() const { return vertices.size() < 3; }
    double area() const;  // shoelace, 0 for degenerate rings
};

struct Disk {
    Point2D center;
    double radius = 0.0;
};

/// Minkowski sum of a segment with a disk of the given radius (closed).
struct Stadium {
    Segment2D core;
    double radius = 0.0;
};

struct BoundingBox {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    bool empty = true;

    void expand(const Point2D& p);
    void expand(const Segment2D& s);
    void expand(const Polygon2D& p);
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double longer_side() const { return width() > height() ? width() : height(); }
};

/// Uniform scale + translate mapping a bounding box into the unit square.
/// Radii computed in normalized units divide by `scale` to return to input
/// units.
struct AffineNormalization {
    double scale = 1.0;
    Point2D offset;  // bounding-box min corner

    Point2D apply(const Point2D& p) const {
        return {(p.x - offset.x) * scale, (p.y - offset.y) * scale};
    }
    Point2D invert(const Point2D& p) const {
        return {p.x / scale + offset.x, p.y / scale + offset.y};
    }
    Segment2D apply(const Segment2D& s) const { return {apply(s.a), apply(s.b)}; }
    Polygon2D apply(const Polygon2D& poly) const;
    double radius_to_input(double r) const { return r / scale; }
    double length_to_unit(double len) const { return len * scale; }
};

AffineNormalization make_normalization(const BoundingBox& box);
std::pair<std::vector<Segment2D>, AffineNormalization>
normalize_segments(const std::vector<Segment2D>& segments);
std::pair<std::vector<Polygon2D>, AffineNormalization>
normalize_polygons(const std::vector<Polygon2D>& polygons);

// --- distances -------------------------------------------------------------

double point_segment_distance(const Point2D& p, const Segment2D& s);

/// d(s, C) = max_{p in s} min_{c in C} dist(p, c): the farthest any point of
/// s can be from its nearest center segment. Closed form via the lower
/// envelope of the per-center convex distance functions along s.
double segment_to_centers_distance(const Segment2D& s, const std::vector<Segment2D>& centers);

/// min_{p in s, q in c} dist(p, q); 0 iff the segments intersect.
double segment_min_distance(const Segment2D& s, const Segment2D& c);

bool segments_intersect(const Segment2D& s, const Segment2D& t);

// --- stadiums ----------------------------------------------------------------

bool stadium_contains(const Stadium& st, const Point2D& p);

/// Parameter interval [t0, t1] of s_j whose points lie inside the stadium,
/// or nullopt when no point does. The sublevel set of a convex distance
/// function is a single interval, so one interval always suffices.
std::optional<std::pair<double, double>>
clip_segment_param_interval(const Segment2D& s_j, const Stadium& st);

/// Maximal sub-segments of s_j inside the stadium (empty or a single one).
std::vector<Segment2D> clip_segment_by_stadium(const Segment2D& s_j, const Stadium& st);

// --- classic primitives ------------------------------------------------------

/// Randomized incremental smallest enclosing disk; the seed makes parallel
/// runs reproducible.
Disk smallest_enclosing_disk(const std::vector<Point2D>& points, std::uint64_t seed = 0x5eed);

/// CCW hull; collinear interior points dropped; 1-2 point inputs yield
/// degenerate polygons.
Polygon2D convex_hull(std::vector<Point2D> points);

/// Ear-clipping triangulation of a simple polygon with >= 3 vertices.
/// Returns exactly v-2 triangles; throws on self-intersecting input.
std::vector<Polygon2D> triangulate(const Polygon2D& poly);

bool polygon_is_simple(const Polygon2D& poly);
bool polygon_is_convex(const Polygon2D& poly);

/// Closed membership test with tolerance `tol` on the boundary. Degenerate
/// polygons are treated as the point / segment they carry.
bool polygon_contains(const Polygon2D& poly, const Point2D& p, double tol = kTol);

/// Crossing-parity interior test only, no boundary tolerance; callers that
/// already know the boundary distance use this to finish the membership
/// decision.
bool polygon_interior_crossing(const Polygon2D& poly, const Point2D& p);

/// Distance to the filled polygon: 0 inside, boundary distance outside.
double distance_to_polygon(const Polygon2D& poly, const Point2D& p);

/// p itself when inside; otherwise the closest boundary point, ties broken
/// by lowest edge index.
Point2D nearest_point_on_polygon(const Point2D& p, const Polygon2D& poly);

// --- grids --------------------------------------------------------------------

/// Lattice points {origin + (i eps, j eps)} inside the polygon dilated by
/// `dilation` (a Minkowski sum with a disk, tested as distance <= dilation).
/// Row-major: y ascending outer, x ascending inner.
std::vector<Point2D> grid_points_in_polygon(const Polygon2D& poly, double eps,
                                            const Point2D& origin, double dilation = 0.0);

std::vector<Point2D> grid_points_in_stadium(const Stadium& st, double eps,
                                            const Point2D& origin);

}  // namespace agu
