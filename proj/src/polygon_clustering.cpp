#include "agu/polygon_clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "agu/kernels.hpp"

namespace agu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void split_xy(const std::vector<Point2D>& pts, std::vector<double>& xs,
              std::vector<double>& ys) {
    xs.resize(pts.size());
    ys.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        xs[i] = pts[i].x;
        ys[i] = pts[i].y;
    }
}

}  // namespace

PointClustering gonzalez_kcenter(const std::vector<Point2D>& points, int k,
                                 std::size_t seed_index) {
    if (points.empty()) throw std::invalid_argument("gonzalez: empty point set");
    if (k < 1) throw std::invalid_argument("gonzalez: k must be at least 1");
    if (seed_index >= points.size()) throw std::invalid_argument("gonzalez: seed out of range");

    PointClustering out;
    const std::size_t n = points.size();
    if (static_cast<std::size_t>(k) >= n) {
        out.centers = points;
        out.radius = 0.0;
        out.assignment.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.assignment[i] = static_cast<int>(i);
        out.sample_count = n;
        return out;
    }

    std::vector<double> xs, ys;
    split_xy(points, xs, ys);
    std::vector<double> best2(n, kInf);
    std::vector<int> owner(n, -1);

    std::size_t next = seed_index;
    for (int c = 0; c < k; ++c) {
        out.centers.push_back(points[next]);
        kernels::min_dist2_point_idx(xs.data(), ys.data(), n, points[next].x, points[next].y, c,
                                     best2.data(), owner.data());
        next = kernels::argmax(best2.data(), n);
    }
    out.radius = std::sqrt(kernels::max_value(best2.data(), n));
    out.assignment = std::move(owner);
    out.sample_count = n;
    return out;
}

std::pair<Point2D, double> max_1center_polygons(const std::vector<Polygon2D>& polygons) {
    if (polygons.empty()) throw std::invalid_argument("empty polygon set");
    std::vector<Point2D> vertices;
    for (const auto& poly : polygons)
        vertices.insert(vertices.end(), poly.vertices.begin(), poly.vertices.end());
    const Disk sed = smallest_enclosing_disk(vertices);

    Point2D center = polygons[0].vertices[0];
    double best = kInf;
    for (const auto& poly : polygons) {
        const Point2D q = nearest_point_on_polygon(sed.center, poly);
        const double d = point_distance(sed.center, q);
        if (d < best) {  // strict: lowest polygon index wins ties
            best = d;
            center = q;
        }
    }
    double radius = 0.0;
    for (const auto& v : vertices) radius = std::max(radius, point_distance(center, v));
    return {center, radius};
}

// --- shared grid-sampling machinery (maximum k-center) ------------------------

namespace {

struct SampleSet {
    std::vector<Point2D> points;  // snapped + in-polygon grid vertices
    double eps_clamped = 0.0;     // after the r_i/k clamp, normalized units
    double cell = 0.0;            // grid cell length actually used
};

// Grid vertices inside the polygons dilated by one cell; vertices outside
// the actual polygons snap to the nearest polygon point (lowest index on
// ties). Works on normalized input; `clamp_floor` bounds how far the
// per-polygon SED clamp may shrink eps (0 disables the floor).
SampleSet build_sample_set(const std::vector<Polygon2D>& polys, int k, double eps,
                           double clamp_floor) {
    double clamp = kInf;
    for (const auto& poly : polys) {
        const double r_i = smallest_enclosing_disk(poly.vertices).radius;
        if (r_i > kTol) clamp = std::min(clamp, r_i / static_cast<double>(k));
    }
    SampleSet out;
    out.eps_clamped = std::min(eps, clamp);
    if (clamp_floor > 0.0) out.eps_clamped = std::max(out.eps_clamped, clamp_floor);
    out.cell = out.eps_clamped / 4.0;

    BoundingBox box;
    for (const auto& poly : polys) box.expand(poly);
    const Point2D origin{box.min_x, box.min_y};
    const double cell = out.cell;
    const double dilation = cell;

    const long i0 = static_cast<long>(std::ceil((box.min_x - dilation - origin.x) / cell - 1e-9));
    const long i1 = static_cast<long>(std::floor((box.max_x + dilation - origin.x) / cell + 1e-9));
    const long j0 = static_cast<long>(std::ceil((box.min_y - dilation - origin.y) / cell - 1e-9));
    const long j1 = static_cast<long>(std::floor((box.max_y + dilation - origin.y) / cell + 1e-9));
    const long cols = i1 - i0 + 1, rows = j1 - j0 + 1;
    if (cols <= 0 || rows <= 0) return out;
    if (cols * rows > 20'000'000L)
        throw std::invalid_argument("eps too small: sampling lattice exceeds 2e7 points");

    const std::size_t total = static_cast<std::size_t>(cols * rows);
    std::vector<double> xs(total), ys(total);
    std::size_t p = 0;
    for (long j = j0; j <= j1; ++j) {
        const double y = origin.y + static_cast<double>(j) * cell;
        for (long i = i0; i <= i1; ++i) {
            xs[p] = origin.x + static_cast<double>(i) * cell;
            ys[p] = y;
            ++p;
        }
    }

    // distance to the nearest polygon (0 inside), tracking the argmin
    std::vector<double> best_d(total, kInf);
    std::vector<int> best_poly(total, -1);
    std::vector<double> bd2(total);
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
        const auto& poly = polys[pi];
        std::fill(bd2.begin(), bd2.end(), kInf);
        const auto& v = poly.vertices;
        const std::size_t nv = v.size();
        const std::size_t edges = nv == 1 ? 1 : (nv == 2 ? 1 : nv);
        for (std::size_t e = 0; e < edges; ++e) {
            const Point2D& a = v[e];
            const Point2D& b = v[(e + 1) % nv];
            kernels::min_dist2_segment(xs.data(), ys.data(), total,
                                       kernels::make_segment_lite(a.x, a.y, b.x, b.y),
                                       bd2.data());
        }
        for (std::size_t q = 0; q < total; ++q) {
            double d = std::sqrt(bd2[q]);
            if (d > kTol && polygon_interior_crossing(poly, Point2D{xs[q], ys[q]})) d = 0.0;
            if (d < best_d[q]) {
                best_d[q] = d;
                best_poly[q] = static_cast<int>(pi);
            }
        }
    }

    for (std::size_t q = 0; q < total; ++q) {
        if (best_d[q] > dilation + kTol) continue;  // outside every Minkowski sum
        const Point2D x{xs[q], ys[q]};
        if (best_d[q] <= kTol) {
            out.points.push_back(x);
        } else {
            out.points.push_back(
                nearest_point_on_polygon(x, polys[static_cast<std::size_t>(best_poly[q])]));
        }
    }
    return out;
}

double radius_against(const std::vector<Point2D>& pts, const std::vector<Point2D>& centers,
                      std::vector<int>* assignment_out) {
    if (pts.empty() || centers.empty()) return 0.0;
    std::vector<double> xs, ys;
    split_xy(pts, xs, ys);
    std::vector<double> best2(pts.size(), kInf);
    std::vector<int> owner(pts.size(), -1);
    for (std::size_t c = 0; c < centers.size(); ++c)
        kernels::min_dist2_point_idx(xs.data(), ys.data(), pts.size(), centers[c].x,
                                     centers[c].y, static_cast<int>(c), best2.data(),
                                     owner.data());
    if (assignment_out != nullptr) *assignment_out = std::move(owner);
    return std::sqrt(kernels::max_value(best2.data(), pts.size()));
}

void require_polygons(const std::vector<Polygon2D>& polys) {
    if (polys.empty()) throw std::invalid_argument("empty polygon set");
    for (const auto& poly : polys)
        if (poly.vertices.empty()) throw std::invalid_argument("polygon without vertices");
}

}  // namespace

double covering_radius(const std::vector<Point2D>& pts, const std::vector<Point2D>& centers) {
    return radius_against(pts, centers, nullptr);
}

PointClustering max_kcenter_convex(const std::vector<Polygon2D>& polygons, int k, double eps,
                                   std::size_t seed_index) {
    require_polygons(polygons);
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    for (const auto& poly : polygons)
        if (!polygon_is_convex(poly))
            throw std::invalid_argument("non-convex input: use max_kcenter_arbitrary");

    auto [norm, transform] = normalize_polygons(polygons);
    const SampleSet samples = build_sample_set(norm, k, eps * transform.scale, 0.0);
    if (samples.points.empty()) throw std::runtime_error("sampling produced no points");

    PointClustering out = gonzalez_kcenter(samples.points, k, seed_index % samples.points.size());
    for (auto& c : out.centers) c = transform.invert(c);
    out.radius = transform.radius_to_input(out.radius);
    out.sample_count = samples.points.size();
    out.summary_points.reserve(samples.points.size());
    for (const auto& p : samples.points) out.summary_points.push_back(transform.invert(p));
    out.alpha_bound = 2.0 + samples.eps_clamped;  // 2(1 + 2 cell) with cell = eps/4
    return out;
}

PointClustering max_kcenter_arbitrary(const std::vector<Polygon2D>& polygons, int k, double eps,
                                      std::size_t seed_index) {
    require_polygons(polygons);
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    for (const auto& poly : polygons)
        if (!polygon_is_simple(poly)) throw std::invalid_argument("polygon is not simple");

    auto [norm, transform] = normalize_polygons(polygons);
    std::vector<Polygon2D> triangles;
    for (const auto& poly : norm) {
        if (poly.vertices.size() <= 3) {
            triangles.push_back(poly);
        } else {
            auto tris = triangulate(poly);
            triangles.insert(triangles.end(), tris.begin(), tris.end());
        }
    }

    // sliver triangles would otherwise drive the SED clamp (and the grid
    // size) through the floor
    const double eps_norm = eps * transform.scale;
    const SampleSet samples = build_sample_set(triangles, k, eps_norm, eps_norm / 2.0);
    if (samples.points.empty()) throw std::runtime_error("sampling produced no points");

    PointClustering out = gonzalez_kcenter(samples.points, k, seed_index % samples.points.size());

    // map each center to the closest point of an input polygon (already on
    // one, so this is an identity up to tolerance)
    for (auto& c : out.centers) {
        double best = kInf;
        Point2D mapped = c;
        for (const auto& poly : norm) {
            const Point2D q = nearest_point_on_polygon(c, poly);
            const double d = point_distance(c, q);
            if (d < best) {
                best = d;
                mapped = q;
            }
        }
        c = mapped;
    }
    out.radius = radius_against(samples.points, out.centers, &out.assignment);

    for (auto& c : out.centers) c = transform.invert(c);
    out.radius = transform.radius_to_input(out.radius);
    out.sample_count = samples.points.size();
    out.summary_points.reserve(samples.points.size());
    for (const auto& p : samples.points) out.summary_points.push_back(transform.invert(p));
    out.alpha_bound = 6.0 + samples.eps_clamped;
    return out;
}

// --- exact colorful k-center ---------------------------------------------------

namespace {

struct ColorfulCandidates {
    std::vector<Point2D> locations;           // unique candidate locations
    std::vector<std::vector<double>> dist;    // location x input point distances
    std::vector<unsigned> point_color_bit;    // remapped color bit per input point
    int color_count = 0;
};

ColorfulCandidates prepare_colorful(const std::vector<ColoredPoint>& pts) {
    ColorfulCandidates cc;
    std::map<int, int> color_map;
    for (const auto& p : pts) color_map.emplace(p.color, 0);
    int bit = 0;
    for (auto& [color, idx] : color_map) idx = bit++;
    cc.color_count = bit;
    if (cc.color_count > 8)
        throw std::invalid_argument("colorful k-center limited to 8 colors");
    cc.point_color_bit.reserve(pts.size());
    for (const auto& p : pts)
        cc.point_color_bit.push_back(static_cast<unsigned>(color_map[p.color]));

    std::map<std::pair<double, double>, int> seen;
    for (const auto& p : pts) {
        const auto key = std::make_pair(p.point.x, p.point.y);
        if (seen.emplace(key, static_cast<int>(cc.locations.size())).second)
            cc.locations.push_back(p.point);
    }
    cc.dist.assign(cc.locations.size(), std::vector<double>(pts.size()));
    for (std::size_t c = 0; c < cc.locations.size(); ++c)
        for (std::size_t p = 0; p < pts.size(); ++p)
            cc.dist[c][p] = point_distance(cc.locations[c], pts[p].point);
    return cc;
}

// Minimum number of candidate masks whose union is `target`; dp over color
// subsets, deterministic lowest-index choices.
struct MaskCover {
    int count = 0;
    std::vector<int> witness;  // candidate indices
    bool feasible = false;
};

MaskCover min_mask_cover(const std::vector<unsigned>& cand_masks,
                         const std::vector<int>& cand_index, unsigned full, int limit) {
    const unsigned size = full + 1;
    std::vector<int> dp(size, std::numeric_limits<int>::max());
    std::vector<int> choice(size, -1);
    dp[0] = 0;
    for (unsigned s = 1; s < size; ++s) {
        const unsigned low_bit = s & (~s + 1);
        for (std::size_t m = 0; m < cand_masks.size(); ++m) {
            if (!(cand_masks[m] & low_bit)) continue;
            const unsigned rest = s & ~cand_masks[m];
            if (dp[rest] == std::numeric_limits<int>::max()) continue;
            if (dp[rest] + 1 < dp[s]) {
                dp[s] = dp[rest] + 1;
                choice[s] = static_cast<int>(m);
            }
        }
    }
    MaskCover out;
    if (dp[full] == std::numeric_limits<int>::max() || dp[full] > limit) return out;
    out.feasible = true;
    out.count = dp[full];
    unsigned s = full;
    while (s != 0) {
        const int m = choice[s];
        out.witness.push_back(cand_index[static_cast<std::size_t>(m)]);
        s &= ~cand_masks[static_cast<std::size_t>(m)];
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

MaskCover colorful_feasible(const ColorfulCandidates& cc, double r, int k) {
    const unsigned full = (1u << cc.color_count) - 1u;
    // coverage bitmask per candidate at radius r, deduplicated
    std::vector<unsigned> masks;
    std::vector<int> index;
    std::map<unsigned, int> seen;
    for (std::size_t c = 0; c < cc.locations.size(); ++c) {
        unsigned mask = 0;
        for (std::size_t p = 0; p < cc.dist[c].size(); ++p)
            if (cc.dist[c][p] <= r + 1e-12) mask |= 1u << cc.point_color_bit[p];
        if (mask == 0) continue;
        if (seen.emplace(mask, static_cast<int>(c)).second) {
            masks.push_back(mask);
            index.push_back(static_cast<int>(c));
        }
    }
    return min_mask_cover(masks, index, full, k);
}

}  // namespace

PointClustering colorful_kcenter_exact(const std::vector<ColoredPoint>& points, int k) {
    if (points.empty()) throw std::invalid_argument("colorful k-center: empty input");
    if (k < 1) throw std::invalid_argument("colorful k-center: k must be at least 1");

    const ColorfulCandidates cc = prepare_colorful(points);

    std::vector<double> radii{0.0};
    for (const auto& row : cc.dist) radii.insert(radii.end(), row.begin(), row.end());
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    // smallest feasible radius: coverage only grows with r
    std::size_t lo = 0, hi = radii.size() - 1;
    if (!colorful_feasible(cc, radii[hi], k).feasible)
        throw std::runtime_error("colorful k-center infeasible");  // cannot happen for k >= 1
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (colorful_feasible(cc, radii[mid], k).feasible)
            hi = mid;
        else
            lo = mid + 1;
    }
    const double r_star = radii[lo];
    MaskCover cover = colorful_feasible(cc, r_star, k);

    PointClustering out;
    for (int c : cover.witness) out.centers.push_back(cc.locations[static_cast<std::size_t>(c)]);
    // pad to k centers with unused candidates; extra centers never hurt
    for (std::size_t c = 0; c < cc.locations.size() && out.centers.size() < static_cast<std::size_t>(k);
         ++c) {
        if (std::find(cover.witness.begin(), cover.witness.end(), static_cast<int>(c)) ==
            cover.witness.end())
            out.centers.push_back(cc.locations[c]);
    }
    out.radius = r_star;
    std::vector<Point2D> raw;
    raw.reserve(points.size());
    for (const auto& p : points) raw.push_back(p.point);
    radius_against(raw, out.centers, &out.assignment);
    out.sample_count = points.size();
    out.alpha_bound = 1.0;
    return out;
}

// --- minimum k-center of polygons ---------------------------------------------

namespace {

double polygon_pair_distance(const Polygon2D& a, const Polygon2D& b) {
    if (polygon_contains(a, b.vertices[0]) || polygon_contains(b, a.vertices[0])) return 0.0;
    const auto edges = [](const Polygon2D& poly) {
        std::vector<Segment2D> out;
        const auto& v = poly.vertices;
        if (v.size() == 1) {
            out.push_back({v[0], v[0]});
            return out;
        }
        const std::size_t n = v.size();
        const std::size_t count = n == 2 ? 1 : n;
        for (std::size_t i = 0; i < count; ++i) out.push_back({v[i], v[(i + 1) % n]});
        return out;
    };
    double best = kInf;
    for (const auto& ea : edges(a))
        for (const auto& eb : edges(b)) best = std::min(best, segment_min_distance(ea, eb));
    return best;
}

}  // namespace

PointClustering min_kcenter_polygons(const std::vector<Polygon2D>& polygons, int k, double eps) {
    require_polygons(polygons);
    if (polygons.size() > 8) throw std::invalid_argument("constant-color limit exceeded");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    std::vector<std::string> warnings;
    // the pairwise-distance resolution rule; a pair that already touches
    // imposes no resolution requirement (its covering radius is zero at any
    // grid), so only positive gaps clamp
    double eps_eff = eps;
    bool overlap = false;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        for (std::size_t j = i + 1; j < polygons.size(); ++j) {
            const double d = polygon_pair_distance(polygons[i], polygons[j]);
            if (d > kTol)
                eps_eff = std::min(eps_eff, d);
            else
                overlap = true;
        }
    }
    if (overlap)
        warnings.push_back("intersecting polygons make the grid resolution rule vacuous "
                           "for those pairs");
    if (eps_eff < eps / 1024.0) {
        eps_eff = eps / 1024.0;
        warnings.push_back("pairwise polygon gaps are far below eps; floored the grid at "
                           "eps/1024");
    }

    BoundingBox box;
    for (const auto& poly : polygons) box.expand(poly);
    const Point2D origin{box.min_x, box.min_y};

    std::vector<ColoredPoint> colored;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const auto grid = grid_points_in_polygon(polygons[i], eps_eff, origin, eps_eff);
        for (const auto& x : grid) {
            // snap into the union of all polygons, lowest index on ties
            double best = kInf;
            Point2D snapped = x;
            for (const auto& poly : polygons) {
                const Point2D q = nearest_point_on_polygon(x, poly);
                const double d = point_distance(x, q);
                if (d < best) {
                    best = d;
                    snapped = q;
                }
            }
            colored.push_back({snapped, static_cast<int>(i)});
        }
    }
    // coincident snaps are common; drop exact duplicates per color
    std::sort(colored.begin(), colored.end(), [](const ColoredPoint& a, const ColoredPoint& b) {
        if (a.color != b.color) return a.color < b.color;
        if (a.point.x != b.point.x) return a.point.x < b.point.x;
        return a.point.y < b.point.y;
    });
    colored.erase(std::unique(colored.begin(), colored.end(),
                              [](const ColoredPoint& a, const ColoredPoint& b) {
                                  return a.color == b.color && a.point.x == b.point.x &&
                                         a.point.y == b.point.y;
                              }),
                  colored.end());

    PointClustering out = colorful_kcenter_exact(colored, k);
    out.alpha_bound = 1.0 + eps_eff;
    out.warnings.insert(out.warnings.end(), warnings.begin(), warnings.end());
    return out;
}

// --- composable k-center --------------------------------------------------------

PointClustering composable_kcenter(const std::vector<Point2D>& points, int k, int partitions,
                                   std::uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("composable: empty point set");
    if (k < 1) throw std::invalid_argument("composable: k must be at least 1");
    if (partitions < 1) throw std::invalid_argument("composable: need at least one partition");

    std::vector<std::vector<Point2D>> parts(static_cast<std::size_t>(partitions));
    for (std::size_t i = 0; i < points.size(); ++i)
        parts[i % static_cast<std::size_t>(partitions)].push_back(points[i]);

    std::vector<Point2D> summary;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        const PointClustering local =
            gonzalez_kcenter(part, k, static_cast<std::size_t>(seed % part.size()));
        summary.insert(summary.end(), local.centers.begin(), local.centers.end());
    }

    const PointClustering final_round =
        gonzalez_kcenter(summary, k, static_cast<std::size_t>(seed % summary.size()));

    PointClustering out;
    out.centers = final_round.centers;
    out.radius = radius_against(points, out.centers, &out.assignment);
    out.sample_count = summary.size();
    out.summary_points = std::move(summary);
    out.alpha_bound = 4.0;
    return out;
}

}  // namespace agu
