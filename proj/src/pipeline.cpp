#include "agu/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

#include "agu/polygon_clustering.hpp"
#include "agu/svg.hpp"

namespace agu {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool parse_ll(const std::string& s, long long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

}  // namespace

std::pair<std::vector<CheckinRecord>, IngestStats>
ingest_checkins(const std::string& path, std::optional<std::size_t> limit) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::vector<CheckinRecord> records;
    IngestStats stats;
    std::string line;
    while (std::getline(in, line)) {
        if (limit && records.size() >= *limit) break;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5) {
            ++stats.skipped["parse"];
            continue;
        }
        CheckinRecord rec;
        double lat = 0.0, lon = 0.0;
        if (!parse_ll(fields[0], rec.user_id) || !parse_double(fields[2], lat) ||
            !parse_double(fields[3], lon)) {
            ++stats.skipped["parse"];
            continue;
        }
        if (!std::isfinite(lat) || !std::isfinite(lon)) {
            ++stats.skipped["nonfinite"];
            continue;
        }
        rec.timestamp = fields[1];
        rec.location_id = fields[4];
        rec.x = lon;  // planar treatment: x = lon, y = lat
        rec.y = lat;
        records.push_back(std::move(rec));
    }
    stats.valid = records.size();
    if (records.empty()) throw std::runtime_error("no valid records in " + path);
    return {std::move(records), std::move(stats)};
}

std::pair<std::vector<UserSummary>, double>
summarize_hulls(const std::vector<CheckinRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize_hulls: no records");
    std::map<long long, std::vector<Point2D>> by_user;
    for (const auto& rec : records) by_user[rec.user_id].push_back({rec.x, rec.y});

    std::vector<UserSummary> summaries;
    std::size_t hull_vertices = 0;
    for (auto& [user, pts] : by_user) {
        UserSummary s;
        s.user_id = user;
        s.point_count = pts.size();
        s.hull = convex_hull(pts);
        hull_vertices += s.hull.vertices.size();
        summaries.push_back(std::move(s));
    }
    const double ratio = static_cast<double>(hull_vertices) / static_cast<double>(records.size());
    return {std::move(summaries), ratio};
}

std::vector<CheckinRecord> synthetic_checkins(std::size_t users, std::size_t points_per_user,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    // Box-Muller; keeps the byte stream independent of the standard
    // library's normal_distribution internals
    const auto gaussian = [&]() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    };

    std::vector<CheckinRecord> records;
    records.reserve(users * points_per_user);
    for (std::size_t u = 0; u < users; ++u) {
        const double cx = uniform01() * 100.0;
        const double cy = uniform01() * 100.0;
        for (std::size_t p = 0; p < points_per_user; ++p) {
            CheckinRecord rec;
            rec.user_id = static_cast<long long>(u + 1);
            rec.timestamp = "2010-01-01T00:00:00Z";
            rec.x = cx + 2.0 * gaussian();
            rec.y = cy + 2.0 * gaussian();
            rec.location_id = "loc" + std::to_string(records.size());
            records.push_back(std::move(rec));
        }
    }
    return records;
}

ExperimentConfig experiment_config_from_json(const io::json& j) {
    ExperimentConfig cfg;
    if (!j.contains("dataset")) throw std::invalid_argument("config: missing dataset");
    const auto& ds = j.at("dataset");
    if (ds.is_string()) {
        cfg.dataset_path = ds.get<std::string>();
    } else if (ds.is_object() && ds.contains("synthetic")) {
        const auto& syn = ds.at("synthetic");
        cfg.synthetic_users = syn.value("users", 40);
        cfg.synthetic_points = syn.value("points_per_user", 50);
        cfg.synthetic_seed = syn.value("seed", 42);
        if (cfg.synthetic_users == 0 || cfg.synthetic_points == 0)
            throw std::invalid_argument("config: synthetic dataset needs users and points");
    } else {
        throw std::invalid_argument("config: dataset must be a path or {\"synthetic\":{...}}");
    }
    cfg.k = j.value("k", 20);
    if (j.contains("eps") && j.at("eps").is_number()) cfg.eps = j.at("eps").get<double>();
    if (j.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto& a : j.at("algorithms")) cfg.algorithms.push_back(a.get<std::string>());
    }
    cfg.partitions = j.value("partitions", 4);
    if (j.contains("limit")) cfg.limit = j.at("limit").get<std::size_t>();
    cfg.full = j.value("full", false);
    cfg.use_test_set = j.value("use_test_set", true);
    cfg.seed = j.value("seed", 1);
    return cfg;
}

io::json reports_to_json(const std::vector<ExperimentReport>& reports) {
    io::json arr = io::json::array();
    for (const auto& r : reports) {
        arr.push_back(io::json{{"k", r.k},
                               {"eps", r.eps},
                               {"dataset_tag", r.dataset_tag},
                               {"algorithm_tag", r.algorithm_tag},
                               {"summary_size", r.summary_size},
                               {"radius", r.radius},
                               {"runtime_ms", r.runtime_ms}});
    }
    return io::json{{"reports", arr}};
}

std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config) {
    for (const auto& alg : config.algorithms)
        if (alg != "composable_points" && alg != "polygon_grid")
            throw std::invalid_argument("unknown algorithm tag: " + alg);

    std::vector<CheckinRecord> records;
    if (config.synthetic_users > 0) {
        records = synthetic_checkins(config.synthetic_users, config.synthetic_points,
                                     config.synthetic_seed);
        if (config.limit && records.size() > *config.limit) records.resize(*config.limit);
    } else if (!config.dataset_path.empty()) {
        const std::optional<std::size_t> cap =
            config.limit ? config.limit
                         : (config.full ? std::optional<std::size_t>{} : kDefaultIngestCap);
        records = ingest_checkins(config.dataset_path, cap).first;
    } else {
        throw std::invalid_argument("config: missing dataset");
    }

    const auto [users, compression] = summarize_hulls(records);
    (void)compression;

    std::vector<Point2D> points;
    points.reserve(records.size());
    for (const auto& rec : records) points.push_back({rec.x, rec.y});

    std::vector<Polygon2D> hulls;
    hulls.reserve(users.size());
    for (const auto& u : users) hulls.push_back(u.hull);

    BoundingBox box;
    for (const auto& p : points) box.expand(p);
    const double eps = config.eps > 0.0
                           ? config.eps
                           : std::max(box.longer_side() * (5.0 / 360.0), 1e-6);

    // test set: grid vertices inside the hulls plus the hull vertices, so
    // evaluating on it dominates evaluating on the summaries alone
    std::vector<Point2D> test_set;
    if (config.use_test_set) {
        const Point2D origin{box.min_x, box.min_y};
        for (const auto& hull : hulls) {
            const auto grid = grid_points_in_polygon(hull, eps, origin);
            test_set.insert(test_set.end(), grid.begin(), grid.end());
            test_set.insert(test_set.end(), hull.vertices.begin(), hull.vertices.end());
        }
        std::sort(test_set.begin(), test_set.end(), [](const Point2D& a, const Point2D& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        test_set.erase(std::unique(test_set.begin(), test_set.end(),
                                   [](const Point2D& a, const Point2D& b) {
                                       return a.x == b.x && a.y == b.y;
                                   }),
                       test_set.end());
    }

    std::vector<ExperimentReport> reports;
    for (const auto& alg : config.algorithms) {
        const auto t0 = std::chrono::steady_clock::now();
        PointClustering result;
        double eps_tag = 0.0;
        if (alg == "composable_points") {
            result = composable_kcenter(points, config.k, config.partitions, config.seed);
        } else {
            result = max_kcenter_arbitrary(hulls, config.k, eps,
                                           static_cast<std::size_t>(config.seed));
            eps_tag = eps;
        }
        const auto t1 = std::chrono::steady_clock::now();
        const long long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

        ExperimentReport input_row;
        input_row.k = config.k;
        input_row.eps = eps_tag;
        input_row.dataset_tag = "input";
        input_row.algorithm_tag = alg;
        input_row.summary_size = result.sample_count;
        input_row.radius = covering_radius(points, result.centers);
        input_row.runtime_ms = ms;
        reports.push_back(input_row);

        if (config.use_test_set) {
            ExperimentReport test_row = input_row;
            test_row.dataset_tag = "test";
            test_row.radius = covering_radius(test_set, result.centers);
            reports.push_back(test_row);
        }

        if (!config.svg_dir.empty()) {
            SvgScene scene;
            scene.summary = result.summary_points;
            scene.centers = result.centers;
            scene.disk_radius = input_row.radius;
            emit_svg(scene, config.svg_dir + "/" + alg + ".svg");
        }
    }
    return reports;
}

}  // namespace agu
