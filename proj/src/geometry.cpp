#include "agu/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "agu/kernels.hpp"

namespace agu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_point(const Point2D& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double dot(double ax, double ay, double bx, double by) { return ax * bx + ay * by; }

double cross3(const Point2D& a, const Point2D& b, const Point2D& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// -1 / 0 / +1 with a relative epsilon so the classification is stable under
// rounding noise on constructed inputs.
int orient_sign(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double v = cross3(a, b, c);
    const double scale = (std::abs(b.x - a.x) + std::abs(b.y - a.y)) *
                         (std::abs(c.x - a.x) + std::abs(c.y - a.y));
    const double eps = 1e-12 * std::max(1e-300, scale);
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool on_segment_collinear(const Point2D& p, const Segment2D& s) {
    return std::min(s.a.x, s.b.x) - kTol <= p.x && p.x <= std::max(s.a.x, s.b.x) + kTol &&
           std::min(s.a.y, s.b.y) - kTol <= p.y && p.y <= std::max(s.a.y, s.b.y) + kTol;
}

// Roots of A t^2 + B t + C = 0, degenerate cases included.
int solve_quadratic(double A, double B, double C, double roots[2]) {
    const double mag = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (mag == 0.0) return 0;
    if (std::abs(A) <= 1e-14 * mag) {
        if (std::abs(B) <= 1e-14 * mag) return 0;
        roots[0] = -C / B;
        return 1;
    }
    double disc = B * B - 4.0 * A * C;
    const double disc_eps = 1e-12 * std::max(B * B, std::abs(4.0 * A * C));
    if (disc < -disc_eps) return 0;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    // numerically stable split
    const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
    int n = 0;
    roots[n++] = q / A;
    if (q != 0.0) roots[n++] = C / q;
    if (n == 2 && roots[0] == roots[1]) n = 1;
    return n;
}

// Quadratic coefficients of the squared distance from s(t) to one piece of
// a center segment; which piece applies is decided by the caller.
struct Quad {
    double a = 0.0, b = 0.0, c = 0.0;
    double eval(double t) const { return (a * t + b) * t + c; }
};

Quad squared_dist_to_point(const Point2D& sa, const Point2D& dir, const Point2D& e) {
    // |sa + t dir - e|^2
    const double px = sa.x - e.x, py = sa.y - e.y;
    Quad q;
    q.a = dot(dir.x, dir.y, dir.x, dir.y);
    q.b = 2.0 * dot(px, py, dir.x, dir.y);
    q.c = dot(px, py, px, py);
    return q;
}

Quad squared_dist_to_line(const Point2D& sa, const Point2D& dir, const Segment2D& c) {
    // |d(t)|^2 - ((d(t) . w)^2) / |w|^2 with d(t) = sa + t dir - c.a
    const double wx = c.b.x - c.a.x, wy = c.b.y - c.a.y;
    const double L2 = dot(wx, wy, wx, wy);
    const double px = sa.x - c.a.x, py = sa.y - c.a.y;
    const double pq = dot(px, py, dir.x, dir.y);
    const double pw = dot(px, py, wx, wy);
    const double qw = dot(dir.x, dir.y, wx, wy);
    Quad q;
    q.a = dot(dir.x, dir.y, dir.x, dir.y) - qw * qw / L2;
    q.b = 2.0 * pq - 2.0 * pw * qw / L2;
    q.c = dot(px, py, px, py) - pw * pw / L2;
    return q;
}

// The parameter values where the projection of s(t) onto the line of c
// crosses the endpoints of c; between them the perpendicular piece applies.
struct PieceBreaks {
    double t_lo = kInf;   // u(t) = 0
    double t_hi = -kInf;  // u(t) = 1
    bool split = false;   // whether u actually varies with t
};

PieceBreaks piece_breaks(const Segment2D& s, const Segment2D& c) {
    PieceBreaks pb;
    const double wx = c.b.x - c.a.x, wy = c.b.y - c.a.y;
    const double L2 = dot(wx, wy, wx, wy);
    if (L2 == 0.0) return pb;
    const double dirx = s.b.x - s.a.x, diry = s.b.y - s.a.y;
    const double qw = dot(dirx, diry, wx, wy);
    const double pw = dot(s.a.x - c.a.x, s.a.y - c.a.y, wx, wy);
    if (qw == 0.0) return pb;  // u constant along s
    pb.split = true;
    const double u0 = -pw / qw;
    const double u1 = (L2 - pw) / qw;
    pb.t_lo = std::min(u0, u1);
    pb.t_hi = std::max(u0, u1);
    return pb;
}

// Quadratic of |s(t) - c|^2 valid on a piece that contains t_probe.
Quad piece_quadratic(const Segment2D& s, const Segment2D& c, double t_probe) {
    const Point2D dir{s.b.x - s.a.x, s.b.y - s.a.y};
    const double wx = c.b.x - c.a.x, wy = c.b.y - c.a.y;
    const double L2 = dot(wx, wy, wx, wy);
    if (L2 == 0.0) return squared_dist_to_point(s.a, dir, c.a);
    const Point2D sp = s.at(t_probe);
    const double u = dot(sp.x - c.a.x, sp.y - c.a.y, wx, wy) / L2;
    if (u < 0.0) return squared_dist_to_point(s.a, dir, c.a);
    if (u > 1.0) return squared_dist_to_point(s.a, dir, c.b);
    return squared_dist_to_line(s.a, dir, c);
}

}  // namespace

double point_distance2(const Point2D& a, const Point2D& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double point_distance(const Point2D& a, const Point2D& b) {
    return std::sqrt(point_distance2(a, b));
}

double Segment2D::length() const { return point_distance(a, b); }

double point_segment_distance(const Point2D& p, const Segment2D& s) {
    const double ux = s.b.x - s.a.x, uy = s.b.y - s.a.y;
    const double len2 = ux * ux + uy * uy;
    if (len2 == 0.0) return point_distance(p, s.a);
    double t = dot(p.x - s.a.x, p.y - s.a.y, ux, uy) / len2;
    t = std::min(std::max(t, 0.0), 1.0);
    const double ex = p.x - (s.a.x + t * ux);
    const double ey = p.y - (s.a.y + t * uy);
    return std::sqrt(ex * ex + ey * ey);
}

double segment_to_centers_distance(const Segment2D& s, const std::vector<Segment2D>& centers) {
    if (centers.empty()) throw std::invalid_argument("no centers");

    const auto lower_envelope = [&](double t) {
        double best = kInf;
        for (const auto& c : centers) best = std::min(best, point_segment_distance(s.at(t), c));
        return best;
    };

    if (s.is_degenerate()) return lower_envelope(0.0);

    // Breakpoints where some center switches between its endpoint /
    // perpendicular regimes; within a cell every squared distance is a
    // plain quadratic in t.
    std::vector<double> cuts{0.0, 1.0};
    for (const auto& c : centers) {
        const PieceBreaks pb = piece_breaks(s, c);
        if (!pb.split) continue;
        if (pb.t_lo > 0.0 && pb.t_lo < 1.0) cuts.push_back(pb.t_lo);
        if (pb.t_hi > 0.0 && pb.t_hi < 1.0) cuts.push_back(pb.t_hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<double> candidates = cuts;
    for (std::size_t cell = 0; cell + 1 < cuts.size(); ++cell) {
        const double lo = cuts[cell], hi = cuts[cell + 1];
        const double mid = 0.5 * (lo + hi);
        std::vector<Quad> quads(centers.size());
        for (std::size_t i = 0; i < centers.size(); ++i)
            quads[i] = piece_quadratic(s, centers[i], mid);
        // crossings of the envelope inside the cell
        for (std::size_t i = 0; i < centers.size(); ++i) {
            for (std::size_t j = i + 1; j < centers.size(); ++j) {
                double roots[2];
                const int nr = solve_quadratic(quads[i].a - quads[j].a, quads[i].b - quads[j].b,
                                               quads[i].c - quads[j].c, roots);
                for (int r = 0; r < nr; ++r)
                    if (roots[r] > lo && roots[r] < hi) candidates.push_back(roots[r]);
            }
        }
    }

    double worst = 0.0;
    for (double t : candidates) worst = std::max(worst, lower_envelope(t));
    return worst;
}

bool segments_intersect(const Segment2D& s, const Segment2D& t) {
    const int o1 = orient_sign(s.a, s.b, t.a);
    const int o2 = orient_sign(s.a, s.b, t.b);
    const int o3 = orient_sign(t.a, t.b, s.a);
    const int o4 = orient_sign(t.a, t.b, s.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment_collinear(t.a, s)) return true;
    if (o2 == 0 && on_segment_collinear(t.b, s)) return true;
    if (o3 == 0 && on_segment_collinear(s.a, t)) return true;
    if (o4 == 0 && on_segment_collinear(s.b, t)) return true;
    return false;
}

double segment_min_distance(const Segment2D& s, const Segment2D& c) {
    if (segments_intersect(s, c)) return 0.0;
    double best = point_segment_distance(s.a, c);
    best = std::min(best, point_segment_distance(s.b, c));
    best = std::min(best, point_segment_distance(c.a, s));
    best = std::min(best, point_segment_distance(c.b, s));
    return best;
}

bool stadium_contains(const Stadium& st, const Point2D& p) {
    return point_segment_distance(p, st.core) <= st.radius + kTol;
}

std::optional<std::pair<double, double>>
clip_segment_param_interval(const Segment2D& s_j, const Stadium& st) {
    const double r = st.radius;
    if (s_j.is_degenerate()) {
        if (point_segment_distance(s_j.a, st.core) <= r + kTol)
            return std::make_pair(0.0, 0.0);
        return std::nullopt;
    }

    std::vector<double> cuts{0.0, 1.0};
    const PieceBreaks pb = piece_breaks(s_j, st.core);
    if (pb.split) {
        if (pb.t_lo > 0.0 && pb.t_lo < 1.0) cuts.push_back(pb.t_lo);
        if (pb.t_hi > 0.0 && pb.t_hi < 1.0) cuts.push_back(pb.t_hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<double> candidates = cuts;
    for (std::size_t cell = 0; cell + 1 < cuts.size(); ++cell) {
        const double lo = cuts[cell], hi = cuts[cell + 1];
        const Quad q = piece_quadratic(s_j, st.core, 0.5 * (lo + hi));
        double roots[2];
        const int nr = solve_quadratic(q.a, q.b, q.c - r * r, roots);
        for (int i = 0; i < nr; ++i) {
            const double t = std::min(std::max(roots[i], 0.0), 1.0);
            if (t >= lo - kTol && t <= hi + kTol) candidates.push_back(t);
        }
        // vertex of the quadratic catches tangency the root solver may miss
        if (q.a > 0.0) {
            const double tv = -q.b / (2.0 * q.a);
            if (tv > lo && tv < hi) candidates.push_back(tv);
        }
    }

    double lo = kInf, hi = -kInf;
    for (double t : candidates) {
        if (point_segment_distance(s_j.at(t), st.core) <= r + kTol) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::vector<Segment2D> clip_segment_by_stadium(const Segment2D& s_j, const Stadium& st) {
    const auto iv = clip_segment_param_interval(s_j, st);
    if (!iv) return {};
    return {Segment2D{s_j.at(iv->first), s_j.at(iv->second)}};
}

// --- smallest enclosing disk -------------------------------------------------

namespace {

bool in_disk(const Disk& d, const Point2D& p) {
    const double r2 = d.radius * d.radius;
    return point_distance2(p, d.center) <= r2 + 1e-12 * (1.0 + r2);
}

Disk disk_of_two(const Point2D& a, const Point2D& b) {
    const Point2D c{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    return {c, 0.5 * point_distance(a, b)};
}

Disk circumdisk(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                                   std::abs(c.x), std::abs(c.y), 1.0});
    if (std::abs(d) < 1e-14 * scale * scale) {
        // collinear: the farthest pair's diametral disk
        Disk best = disk_of_two(a, b);
        const Disk d2 = disk_of_two(a, c);
        if (d2.radius > best.radius) best = d2;
        const Disk d3 = disk_of_two(b, c);
        if (d3.radius > best.radius) best = d3;
        return best;
    }
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    const Point2D center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                         (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {center, point_distance(center, a)};
}

}  // namespace

Disk smallest_enclosing_disk(const std::vector<Point2D>& points, std::uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("smallest_enclosing_disk: empty input");
    std::vector<Point2D> pts = points;
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);

    Disk d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (in_disk(d, pts[i])) continue;
        d = Disk{pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (in_disk(d, pts[j])) continue;
            d = disk_of_two(pts[i], pts[j]);
            for (std::size_t l = 0; l < j; ++l) {
                if (in_disk(d, pts[l])) continue;
                d = circumdisk(pts[i], pts[j], pts[l]);
            }
        }
    }
    return d;
}

// --- hull / polygon ----------------------------------------------------------

Polygon2D convex_hull(std::vector<Point2D> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::sort(points.begin(), points.end(), [](const Point2D& a, const Point2D& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Point2D& a, const Point2D& b) {
                                 return a.x == b.x && a.y == b.y;
                             }),
                 points.end());
    const std::size_t n = points.size();
    if (n <= 2) {
        Polygon2D poly;
        poly.vertices = points;
        return poly;
    }
    std::vector<Point2D> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross3(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross3(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {  // all collinear
        Polygon2D poly;
        poly.vertices = {points.front(), points.back()};
        return poly;
    }
    Polygon2D poly;
    poly.vertices = std::move(hull);
    return poly;
}

namespace {

double signed_area(const std::vector<Point2D>& ring) {
    double s = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2D& p = ring[i];
        const Point2D& q = ring[(i + 1) % ring.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

}  // namespace

Polygon2D Polygon2D::from_ring(std::vector<Point2D> ring) {
    if (ring.empty()) throw std::invalid_argument("polygon requires at least one vertex");
    for (const auto& v : ring)
        if (!finite_point(v)) throw std::invalid_argument("polygon vertex not finite");
    if (ring.size() >= 2 && ring.front().x == ring.back().x && ring.front().y == ring.back().y)
        ring.pop_back();
    for (std::size_t i = 0; i + 1 < ring.size(); ++i)
        if (ring[i].x == ring[i + 1].x && ring[i].y == ring[i + 1].y)
            throw std::invalid_argument("consecutive duplicate polygon vertices");
    if (ring.size() >= 3 && signed_area(ring) < 0.0)
        std::reverse(ring.begin(), ring.end());
    Polygon2D poly;
    poly.vertices = std::move(ring);
    return poly;
}

double Polygon2D::area() const {
    if (vertices.size() < 3) return 0.0;
    return std::abs(signed_area(vertices));
}

bool polygon_is_simple(const Polygon2D& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i) {
        const Segment2D ei{v[i], v[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Segment2D ej{v[j], v[(j + 1) % n]};
            if (adjacent) {
                // adjacent edges may only share their common endpoint
                const Point2D& shared = (j == i + 1) ? v[j] : v[0];
                const Point2D& tip_i = (j == i + 1) ? v[i] : v[1];
                const Point2D& tip_j = (j == i + 1) ? v[(j + 1) % n] : v[n - 1];
                if (orient_sign(tip_i, shared, tip_j) == 0 &&
                    dot(tip_i.x - shared.x, tip_i.y - shared.y, tip_j.x - shared.x,
                        tip_j.y - shared.y) > 0.0)
                    return false;  // spike folding back on itself
                continue;
            }
            if (segments_intersect(ei, ej)) return false;
        }
    }
    return true;
}

bool polygon_is_convex(const Polygon2D& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return true;
    if (!polygon_is_simple(poly)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orient_sign(v[i], v[(i + 1) % n], v[(i + 2) % n]) < 0) return false;
    }
    return true;
}

namespace {

double polygon_boundary_distance(const Polygon2D& poly, const Point2D& p) {
    const auto& v = poly.vertices;
    if (v.size() == 1) return point_distance(p, v[0]);
    double best = kInf;
    const std::size_t n = v.size();
    const std::size_t edges = (n == 2) ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i)
        best = std::min(best, point_segment_distance(p, Segment2D{v[i], v[(i + 1) % n]}));
    return best;
}

bool crossing_inside(const Polygon2D& poly, const Point2D& p) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y) &&
            p.x < (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
            inside = !inside;
    }
    return inside;
}

}  // namespace

bool polygon_contains(const Polygon2D& poly, const Point2D& p, double tol) {
    if (polygon_boundary_distance(poly, p) <= tol) return true;
    if (poly.vertices.size() < 3) return false;
    return crossing_inside(poly, p);
}

bool polygon_interior_crossing(const Polygon2D& poly, const Point2D& p) {
    if (poly.vertices.size() < 3) return false;
    return crossing_inside(poly, p);
}

double distance_to_polygon(const Polygon2D& poly, const Point2D& p) {
    const double bd = polygon_boundary_distance(poly, p);
    if (poly.vertices.size() >= 3 && crossing_inside(poly, p)) return 0.0;
    return bd;
}

Point2D nearest_point_on_polygon(const Point2D& p, const Polygon2D& poly) {
    if (polygon_contains(poly, p, kTol)) return p;
    const auto& v = poly.vertices;
    if (v.size() == 1) return v[0];
    const std::size_t n = v.size();
    const std::size_t edges = (n == 2) ? 1 : n;
    double best = kInf;
    Point2D best_point = v[0];
    for (std::size_t i = 0; i < edges; ++i) {
        const Segment2D e{v[i], v[(i + 1) % n]};
        const double ux = e.b.x - e.a.x, uy = e.b.y - e.a.y;
        const double len2 = ux * ux + uy * uy;
        double t = len2 == 0.0 ? 0.0 : dot(p.x - e.a.x, p.y - e.a.y, ux, uy) / len2;
        t = std::min(std::max(t, 0.0), 1.0);
        const Point2D q{e.a.x + t * ux, e.a.y + t * uy};
        const double d = point_distance(p, q);
        if (d < best) {  // strict: lowest edge index wins ties
            best = d;
            best_point = q;
        }
    }
    return best_point;
}

// --- triangulation -----------------------------------------------------------

namespace {

bool point_in_triangle_closed(const Point2D& p, const Point2D& a, const Point2D& b,
                              const Point2D& c) {
    const double area2 = std::abs(cross3(a, b, c));
    const double scale = std::max({std::abs(a.x - c.x), std::abs(a.y - c.y),
                                   std::abs(b.x - c.x), std::abs(b.y - c.y), 1.0});
    if (area2 <= 1e-12 * scale * scale) {
        // degenerate ear: blocked only by points on the spanned segment
        Segment2D span{a, c};
        return point_segment_distance(p, span) <= 1e-12 * scale &&
               point_distance(p, a) > 1e-12 * scale && point_distance(p, c) > 1e-12 * scale;
    }
    const int s1 = orient_sign(a, b, p);
    const int s2 = orient_sign(b, c, p);
    const int s3 = orient_sign(c, a, p);
    return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

}  // namespace

std::vector<Polygon2D> triangulate(const Polygon2D& poly) {
    const std::size_t n = poly.vertices.size();
    if (n < 3) throw std::invalid_argument("triangulate: need at least 3 vertices");
    if (!polygon_is_simple(poly)) throw std::invalid_argument("triangulate: not simple");

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    const auto& v = poly.vertices;

    std::vector<Polygon2D> triangles;
    triangles.reserve(n - 2);

    const auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
        Polygon2D tri;
        tri.vertices = {v[a], v[b], v[c]};
        triangles.push_back(std::move(tri));
    };

    while (idx.size() > 3) {
        const std::size_t m = idx.size();
        bool clipped = false;
        // prefer strictly convex ears, fall back to collinear ones
        for (int allow_flat = 0; allow_flat <= 1 && !clipped; ++allow_flat) {
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t ip = idx[(i + m - 1) % m];
                const std::size_t ic = idx[i];
                const std::size_t in = idx[(i + 1) % m];
                const int turn = orient_sign(v[ip], v[ic], v[in]);
                if (turn < 0) continue;
                if (turn == 0 && !allow_flat) continue;
                bool blocked = false;
                for (std::size_t j = 0; j < m && !blocked; ++j) {
                    const std::size_t other = idx[j];
                    if (other == ip || other == ic || other == in) continue;
                    blocked = point_in_triangle_closed(v[other], v[ip], v[ic], v[in]);
                }
                if (blocked) continue;
                emit(ip, ic, in);
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
                clipped = true;
                break;
            }
        }
        if (!clipped) throw std::runtime_error("triangulate: no ear found");
    }
    emit(idx[0], idx[1], idx[2]);
    return triangles;
}

// --- grids ---------------------------------------------------------------------

namespace {

std::vector<Point2D> grid_points_filtered(const BoundingBox& box, double eps,
                                          const Point2D& origin,
                                          const std::vector<kernels::SegmentLite>& edges,
                                          double boundary_limit,
                                          const Polygon2D* interior_poly) {
    if (!(eps > 0.0)) throw std::invalid_argument("grid eps must be positive");
    const long i0 = static_cast<long>(std::ceil((box.min_x - origin.x) / eps - 1e-9));
    const long i1 = static_cast<long>(std::floor((box.max_x - origin.x) / eps + 1e-9));
    const long j0 = static_cast<long>(std::ceil((box.min_y - origin.y) / eps - 1e-9));
    const long j1 = static_cast<long>(std::floor((box.max_y - origin.y) / eps + 1e-9));
    if (i1 < i0 || j1 < j0) return {};
    const long cols = i1 - i0 + 1;
    const long rows = j1 - j0 + 1;
    if (cols * rows > 20'000'000L)
        throw std::invalid_argument("grid eps too small: lattice exceeds 2e7 points");

    const std::size_t total = static_cast<std::size_t>(cols * rows);
    std::vector<double> xs(total), ys(total);
    std::size_t p = 0;
    for (long j = j0; j <= j1; ++j) {
        const double y = origin.y + static_cast<double>(j) * eps;
        for (long i = i0; i <= i1; ++i) {
            xs[p] = origin.x + static_cast<double>(i) * eps;
            ys[p] = y;
            ++p;
        }
    }
    std::vector<double> bd2(total, kInf);
    for (const auto& e : edges) kernels::min_dist2_segment(xs.data(), ys.data(), total, e, bd2.data());

    const double limit2 = boundary_limit * boundary_limit;
    std::vector<Point2D> out;
    for (std::size_t q = 0; q < total; ++q) {
        const Point2D pt{xs[q], ys[q]};
        bool in = bd2[q] <= limit2;
        if (!in && interior_poly != nullptr) in = crossing_inside(*interior_poly, pt);
        if (in) out.push_back(pt);
    }
    return out;
}

std::vector<kernels::SegmentLite> polygon_edges_lite(const Polygon2D& poly) {
    const auto& v = poly.vertices;
    std::vector<kernels::SegmentLite> edges;
    if (v.size() == 1) {
        edges.push_back(kernels::make_segment_lite(v[0].x, v[0].y, v[0].x, v[0].y));
        return edges;
    }
    const std::size_t n = v.size();
    const std::size_t count = (n == 2) ? 1 : n;
    for (std::size_t i = 0; i < count; ++i) {
        const Point2D& a = v[i];
        const Point2D& b = v[(i + 1) % n];
        edges.push_back(kernels::make_segment_lite(a.x, a.y, b.x, b.y));
    }
    return edges;
}

}  // namespace

std::vector<Point2D> grid_points_in_polygon(const Polygon2D& poly, double eps,
                                            const Point2D& origin, double dilation) {
    BoundingBox box;
    box.expand(poly);
    box.min_x -= dilation;
    box.min_y -= dilation;
    box.max_x += dilation;
    box.max_y += dilation;
    const Polygon2D* interior = poly.vertices.size() >= 3 ? &poly : nullptr;
    return grid_points_filtered(box, eps, origin, polygon_edges_lite(poly), dilation + kTol,
                                interior);
}

std::vector<Point2D> grid_points_in_stadium(const Stadium& st, double eps,
                                            const Point2D& origin) {
    BoundingBox box;
    box.expand(st.core);
    box.min_x -= st.radius;
    box.min_y -= st.radius;
    box.max_x += st.radius;
    box.max_y += st.radius;
    const std::vector<kernels::SegmentLite> core{kernels::make_segment_lite(
        st.core.a.x, st.core.a.y, st.core.b.x, st.core.b.y)};
    return grid_points_filtered(box, eps, origin, core, st.radius + kTol, nullptr);
}

// --- bounding boxes / normalization ---------------------------------------------

void BoundingBox::expand(const Point2D& p) {
    if (empty) {
        min_x = max_x = p.x;
        min_y = max_y = p.y;
        empty = false;
        return;
    }
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
}

void BoundingBox::expand(const Segment2D& s) {
    expand(s.a);
    expand(s.b);
}

void BoundingBox::expand(const Polygon2D& p) {
    for (const auto& v : p.vertices) expand(v);
}

Polygon2D AffineNormalization::apply(const Polygon2D& poly) const {
    Polygon2D out = poly;
    for (auto& v : out.vertices) v = apply(v);
    return out;
}

AffineNormalization make_normalization(const BoundingBox& box) {
    AffineNormalization t;
    if (box.empty) return t;
    t.offset = {box.min_x, box.min_y};
    const double side = box.longer_side();
    t.scale = side > 0.0 ? 1.0 / side : 1.0;
    return t;
}

std::pair<std::vector<Segment2D>, AffineNormalization>
normalize_segments(const std::vector<Segment2D>& segments) {
    BoundingBox box;
    for (const auto& s : segments) box.expand(s);
    const AffineNormalization t = make_normalization(box);
    std::vector<Segment2D> out;
    out.reserve(segments.size());
    for (const auto& s : segments) out.push_back(t.apply(s));
    return {std::move(out), t};
}

std::pair<std::vector<Polygon2D>, AffineNormalization>
normalize_polygons(const std::vector<Polygon2D>& polygons) {
    BoundingBox box;
    for (const auto& p : polygons) box.expand(p);
    const AffineNormalization t = make_normalization(box);
    std::vector<Polygon2D> out;
    out.reserve(polygons.size());
    for (const auto& p : polygons) out.push_back(t.apply(p));
    return {std::move(out), t};
}

}  // namespace agu
