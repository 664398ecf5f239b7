#include "agu/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace agu::io {

namespace {

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": not finite");
    return v;
}

}  // namespace

json to_json(const Point2D& p) { return json::array({p.x, p.y}); }

json to_json(const Segment2D& s) { return json{{"a", to_json(s.a)}, {"b", to_json(s.b)}}; }

json to_json(const Polygon2D& poly) {
    json ring = json::array();
    for (const auto& v : poly.vertices) ring.push_back(to_json(v));
    return json{{"ring", ring}};
}

Point2D point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("point: expected [x, y]");
    return {finite_number(j[0], "point.x"), finite_number(j[1], "point.y")};
}

Segment2D segment_from_json(const json& j) {
    if (!j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("segment: expected {\"a\":[x,y],\"b\":[x,y]}");
    return {point_from_json(j.at("a")), point_from_json(j.at("b"))};
}

Polygon2D polygon_from_json(const json& j) {
    if (!j.contains("ring") || !j.at("ring").is_array())
        throw std::invalid_argument("polygon: expected {\"ring\":[[x,y],...]}");
    std::vector<Point2D> ring;
    for (const auto& v : j.at("ring")) ring.push_back(point_from_json(v));
    return Polygon2D::from_ring(std::move(ring));
}

std::vector<Segment2D> segments_from_json(const json& j) {
    if (!j.contains("segments") || !j.at("segments").is_array())
        throw std::invalid_argument("expected {\"segments\":[...]}");
    std::vector<Segment2D> out;
    for (const auto& s : j.at("segments")) out.push_back(segment_from_json(s));
    return out;
}

std::vector<Polygon2D> polygons_from_json(const json& j) {
    if (!j.contains("polygons") || !j.at("polygons").is_array())
        throw std::invalid_argument("expected {\"polygons\":[...]}");
    std::vector<Polygon2D> out;
    for (const auto& p : j.at("polygons")) out.push_back(polygon_from_json(p));
    return out;
}

json segments_to_json(const std::vector<Segment2D>& segments) {
    json arr = json::array();
    for (const auto& s : segments) arr.push_back(to_json(s));
    return json{{"segments", arr}};
}

json polygons_to_json(const std::vector<Polygon2D>& polygons) {
    json arr = json::array();
    for (const auto& p : polygons) arr.push_back(to_json(p));
    return json{{"polygons", arr}};
}

MultiIntervalInstance instance_from_json(const json& j) {
    if (!j.contains("sets") || !j.at("sets").is_array())
        throw std::invalid_argument("expected {\"sets\":[[[lo,hi],...],...]}");
    MultiIntervalInstance inst;
    for (const auto& set : j.at("sets")) {
        IntervalSet q;
        for (const auto& iv : set) {
            if (!iv.is_array() || iv.size() != 2)
                throw std::invalid_argument("interval: expected [lo, hi]");
            const double lo = finite_number(iv[0], "interval.lo");
            const double hi = finite_number(iv[1], "interval.hi");
            if (lo > hi) throw std::invalid_argument("interval: lo > hi");
            q.push_back({lo, hi});
        }
        inst.sets.push_back(std::move(q));
    }
    return inst;
}

json instance_to_json(const MultiIntervalInstance& inst) {
    json sets = json::array();
    for (const auto& set : inst.sets) {
        json q = json::array();
        for (const auto& iv : set) q.push_back(json::array({iv.lo, iv.hi}));
        sets.push_back(q);
    }
    return json{{"sets", sets}};
}

json cover_solution_to_json(const CoverSolution& sol, std::size_t atom_count) {
    const double bound = std::log(static_cast<double>(std::max<std::size_t>(atom_count, 1))) + 1.0;
    return json{{"chosen", sol.chosen},
                {"atoms", atom_count},
                {"greedy_bound", bound}};
}

json segment_clustering_to_json(const SegmentClustering& result, bool with_frontier) {
    json out{{"centers", result.center_indices},
             {"radius", result.radius},
             {"mode", result.mode == CoverMode::max ? "max" : "min"}};
    if (with_frontier) {
        json frontier = json::array();
        for (const auto& entry : result.frontier)
            frontier.push_back(json::array({entry.radius, entry.cover_size}));
        out["frontier"] = frontier;
    }
    return out;
}

json point_clustering_to_json(const PointClustering& result) {
    json centers = json::array();
    for (const auto& c : result.centers) centers.push_back(to_json(c));
    json out{{"centers", centers},
             {"radius", result.radius},
             {"samples", result.sample_count},
             {"alpha_bound", result.alpha_bound}};
    if (!result.warnings.empty()) out["warnings"] = result.warnings;
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace agu::io
