#include "agu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace agu::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Local distance evaluations, derived from first principles (endpoint and
// perpendicular-foot candidates) rather than the library's clamp form.

double o_dist(const Point2D& a, const Point2D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double o_point_segment(const Point2D& p, const Segment2D& s) {
    double best = std::min(o_dist(p, s.a), o_dist(p, s.b));
    const double ux = s.b.x - s.a.x, uy = s.b.y - s.a.y;
    const double len2 = ux * ux + uy * uy;
    if (len2 > 0.0) {
        const double t = ((p.x - s.a.x) * ux + (p.y - s.a.y) * uy) / len2;
        if (t >= 0.0 && t <= 1.0) {
            const Point2D foot{s.a.x + t * ux, s.a.y + t * uy};
            best = std::min(best, o_dist(p, foot));
        }
    }
    return best;
}

int o_orient(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
}

bool o_segments_cross(const Segment2D& s, const Segment2D& t) {
    const int o1 = o_orient(s.a, s.b, t.a);
    const int o2 = o_orient(s.a, s.b, t.b);
    const int o3 = o_orient(t.a, t.b, s.a);
    const int o4 = o_orient(t.a, t.b, s.b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

double o_segment_segment(const Segment2D& s, const Segment2D& t) {
    if (o_segments_cross(s, t)) return 0.0;
    return std::min(std::min(o_point_segment(s.a, t), o_point_segment(s.b, t)),
                    std::min(o_point_segment(t.a, s), o_point_segment(t.b, s)));
}

bool o_point_in_polygon(const Polygon2D& poly, const Point2D& p) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n == 1) return o_dist(p, v[0]) <= 1e-9;
    if (n == 2) return o_point_segment(p, Segment2D{v[0], v[1]}) <= 1e-9;
    for (std::size_t i = 0; i < n; ++i)
        if (o_point_segment(p, Segment2D{v[i], v[(i + 1) % n]}) <= 1e-9) return true;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y) &&
            p.x < (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
            inside = !inside;
    }
    return inside;
}

// Lexicographic k-combinations of 0..n-1.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

long long combinations_count(std::size_t n, int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) {
        c = c * static_cast<long long>(n - static_cast<std::size_t>(i)) / (i + 1);
        if (c > (1LL << 40)) return c;  // caller caps anyway
    }
    return c;
}

std::string subset_to_string(const std::vector<int>& subset) {
    std::ostringstream oss;
    oss << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) oss << ",";
        oss << subset[i];
    }
    oss << "}";
    return oss.str();
}

std::vector<Point2D> sample_segment(const Segment2D& s, double step) {
    std::vector<Point2D> pts;
    const double len = std::hypot(s.b.x - s.a.x, s.b.y - s.a.y);
    const auto n = static_cast<std::size_t>(std::floor(len / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = len > 0.0 ? std::min(1.0, static_cast<double>(i) * step / len) : 0.0;
        pts.push_back({s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)});
    }
    if (static_cast<double>(n) * step < len * (1.0 - 1e-9)) pts.push_back(s.b);
    return pts;
}

}  // namespace

OracleReport brute_set_cover(const CoverInstance& ci) {
    const std::size_t n = ci.covers.size();
    if (n > 20) throw std::invalid_argument("brute_set_cover: more than 20 sets");
    const std::size_t atoms = ci.atoms.size();

    OracleReport report;
    if (atoms == 0) {
        report.witness = "{}";
        return report;
    }

    std::vector<std::vector<bool>> covered_by(n, std::vector<bool>(atoms, false));
    for (std::size_t s = 0; s < n; ++s)
        for (int a : ci.covers[s]) covered_by[s][static_cast<std::size_t>(a)] = true;

    for (int size = 1; size <= static_cast<int>(n); ++size) {
        std::vector<int> comb(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        do {
            ++report.search_space_size;
            std::size_t hit = 0;
            std::vector<bool> covered(atoms, false);
            for (int s : comb)
                for (std::size_t a = 0; a < atoms; ++a)
                    if (covered_by[static_cast<std::size_t>(s)][a] && !covered[a]) {
                        covered[a] = true;
                        ++hit;
                    }
            if (hit == atoms) {
                report.optimum = size;
                report.witness = subset_to_string(comb);
                return report;
            }
        } while (next_combination(comb, static_cast<int>(n)));
    }
    throw std::runtime_error("brute_set_cover: infeasible instance");
}

OracleReport brute_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                    CoverMode mode, double resolution) {
    if (segments.empty()) throw std::invalid_argument("empty segment set");
    if (k < 1 || static_cast<std::size_t>(k) > segments.size())
        throw std::invalid_argument("k out of range");
    if (combinations_count(segments.size(), k) > 100'000)
        throw std::invalid_argument("combinatorial limit exceeded");

    std::vector<std::vector<Point2D>> samples;
    if (mode == CoverMode::max) {
        if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
        samples.reserve(segments.size());
        for (const auto& s : segments) samples.push_back(sample_segment(s, resolution));
    }

    OracleReport report;
    report.resolution = mode == CoverMode::max ? 2.0 * resolution : 0.0;
    double best = kInf;
    std::vector<int> best_subset;

    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
        ++report.search_space_size;
        double cost = 0.0;
        for (std::size_t j = 0; j < segments.size() && cost < best; ++j) {
            if (mode == CoverMode::max) {
                for (const auto& p : samples[j]) {
                    double nearest = kInf;
                    for (int c : comb)
                        nearest = std::min(
                            nearest, o_point_segment(p, segments[static_cast<std::size_t>(c)]));
                    cost = std::max(cost, nearest);
                    if (cost >= best) break;
                }
            } else {
                double nearest = kInf;
                for (int c : comb)
                    nearest = std::min(nearest, o_segment_segment(
                                                    segments[j],
                                                    segments[static_cast<std::size_t>(c)]));
                cost = std::max(cost, nearest);
            }
        }
        if (cost < best) {
            best = cost;
            best_subset = comb;
        }
    } while (next_combination(comb, static_cast<int>(segments.size())));

    report.optimum = best;
    report.witness = subset_to_string(best_subset);
    return report;
}

OracleReport brute_kcenter_points(const std::vector<Point2D>& points, int k,
                                  const std::vector<Point2D>& candidate_centers) {
    if (points.empty() || candidate_centers.empty())
        throw std::invalid_argument("empty input");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const int kk = std::min<int>(k, static_cast<int>(candidate_centers.size()));
    if (combinations_count(candidate_centers.size(), kk) > 1'000'000)
        throw std::invalid_argument("combinatorial limit exceeded");

    OracleReport report;
    double best = kInf;
    std::vector<int> best_subset;
    std::vector<int> comb(static_cast<std::size_t>(kk));
    for (int i = 0; i < kk; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
        ++report.search_space_size;
        double cost = 0.0;
        for (const auto& p : points) {
            double nearest = kInf;
            for (int c : comb)
                nearest = std::min(nearest,
                                   o_dist(p, candidate_centers[static_cast<std::size_t>(c)]));
            cost = std::max(cost, nearest);
            if (cost >= best) break;
        }
        if (cost < best) {
            best = cost;
            best_subset = comb;
        }
    } while (next_combination(comb, static_cast<int>(candidate_centers.size())));

    report.optimum = best;
    report.witness = subset_to_string(best_subset);
    return report;
}

OracleReport brute_polygon_kcenter(const std::vector<Polygon2D>& polygons, int k,
                                   double grid_resolution, CoverMode mode) {
    if (polygons.empty()) throw std::invalid_argument("empty polygon set");
    if (!(grid_resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
    if (k < 1) throw std::invalid_argument("k must be at least 1");

    double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
    for (const auto& poly : polygons) {
        for (const auto& v : poly.vertices) {
            min_x = std::min(min_x, v.x);
            min_y = std::min(min_y, v.y);
            max_x = std::max(max_x, v.x);
            max_y = std::max(max_y, v.y);
        }
    }

    const auto lattice_inside = [&](double step) {
        std::vector<Point2D> pts;
        std::vector<int> poly_of;
        const auto cols = static_cast<long>(std::floor((max_x - min_x) / step + 1e-9));
        const auto rows = static_cast<long>(std::floor((max_y - min_y) / step + 1e-9));
        for (long j = 0; j <= rows; ++j) {
            for (long i = 0; i <= cols; ++i) {
                const Point2D p{min_x + static_cast<double>(i) * step,
                                min_y + static_cast<double>(j) * step};
                for (std::size_t q = 0; q < polygons.size(); ++q) {
                    if (o_point_in_polygon(polygons[q], p)) {
                        pts.push_back(p);
                        poly_of.push_back(static_cast<int>(q));
                        break;
                    }
                }
            }
        }
        return std::make_pair(pts, poly_of);
    };

    const auto [candidates, cand_poly] = lattice_inside(grid_resolution);
    (void)cand_poly;
    if (candidates.empty()) throw std::runtime_error("no grid candidate falls inside");
    if (candidates.size() > 1000)
        throw std::invalid_argument("candidate limit exceeded; coarsen the resolution");
    const int kk = std::min<int>(k, static_cast<int>(candidates.size()));
    if (combinations_count(candidates.size(), kk) > 1'000'000)
        throw std::invalid_argument("combinatorial limit exceeded");

    const auto [evals, eval_poly] = lattice_inside(grid_resolution / 2.0);

    // per-polygon evaluation buckets are only consulted in min mode; each
    // polygon always contributes at least its own vertices' nearest grid
    // points because the dilated lattice is denser than the polygon itself
    std::vector<std::vector<std::size_t>> by_poly(polygons.size());
    for (std::size_t e = 0; e < evals.size(); ++e) {
        for (std::size_t q = 0; q < polygons.size(); ++q)
            if (o_point_in_polygon(polygons[q], evals[e]))
                by_poly[q].push_back(e);
    }
    if (mode == CoverMode::min)
        for (std::size_t q = 0; q < polygons.size(); ++q)
            if (by_poly[q].empty())
                throw std::runtime_error("a polygon received no evaluation point");

    OracleReport report;
    report.resolution = grid_resolution * std::sqrt(2.0);
    double best = kInf;
    std::vector<int> best_subset;
    std::vector<int> comb(static_cast<std::size_t>(kk));
    for (int i = 0; i < kk; ++i) comb[static_cast<std::size_t>(i)] = i;

    const auto nearest_center = [&](const Point2D& p) {
        double nearest = kInf;
        for (int c : comb)
            nearest = std::min(nearest, o_dist(p, candidates[static_cast<std::size_t>(c)]));
        return nearest;
    };

    do {
        ++report.search_space_size;
        double cost = 0.0;
        if (mode == CoverMode::max) {
            for (const auto& p : evals) {
                cost = std::max(cost, nearest_center(p));
                if (cost >= best) break;
            }
        } else {
            for (std::size_t q = 0; q < polygons.size() && cost < best; ++q) {
                double reach = kInf;
                for (std::size_t e : by_poly[q]) reach = std::min(reach, nearest_center(evals[e]));
                cost = std::max(cost, reach);
            }
        }
        if (cost < best) {
            best = cost;
            best_subset = comb;
        }
    } while (next_combination(comb, static_cast<int>(candidates.size())));

    report.optimum = best;
    report.witness = subset_to_string(best_subset);
    return report;
}

}  // namespace agu::oracle
