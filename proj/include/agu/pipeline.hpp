#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agu/geometry.hpp"
#include "agu/io.hpp"

namespace agu {

struct CheckinRecord {
    long long user_id = 0;
    std::string timestamp;  // opaque, never interpreted
    double x = 0.0;         // longitude
    double y = 0.0;         // latitude
    std::string location_id;
};

struct IngestStats {
    std::size_t valid = 0;
    std::map<std::string, std::size_t> skipped;  // per-reason counters
};

/// Tab-separated `user<TAB>timestamp<TAB>lat<TAB>lon<TAB>location_id`.
/// Malformed lines are skipped and counted; `limit` caps accepted records.
/// Throws on an unreadable file or when no line parses.
std::pair<std::vector<CheckinRecord>, IngestStats>
ingest_checkins(const std::string& path, std::optional<std::size_t> limit = std::nullopt);

struct UserSummary {
    long long user_id = 0;
    std::size_t point_count = 0;
    Polygon2D hull;
};

/// Group by user and take convex hulls (degenerate for 1-2 points).
/// The ratio is total hull vertices over total input points.
std::pair<std::vector<UserSummary>, double>
summarize_hulls(const std::vector<CheckinRecord>& records);

/// Deterministic clustered dataset: user centers uniform in [0,100]^2,
/// check-ins Gaussian around them. Hand-rolled sampling so the bytes do not
/// depend on the standard library's distribution internals.
std::vector<CheckinRecord> synthetic_checkins(std::size_t users, std::size_t points_per_user,
                                              std::uint64_t seed);

struct ExperimentConfig {
    std::string dataset_path;          // TSV file; empty when synthetic
    std::size_t synthetic_users = 0;   // nonzero selects the synthetic dataset
    std::size_t synthetic_points = 0;
    std::uint64_t synthetic_seed = 42;
    int k = 20;
    double eps = -1.0;  // <= 0 selects the automatic choice
    std::vector<std::string> algorithms{"composable_points", "polygon_grid"};
    int partitions = 4;
    std::optional<std::size_t> limit;  // explicit row cap
    bool full = false;                 // lift the 50,000-row desk cap
    bool use_test_set = true;
    std::uint64_t seed = 1;
    std::string svg_dir;  // empty: no figures
};

ExperimentConfig experiment_config_from_json(const io::json& j);

struct ExperimentReport {
    int k = 0;
    double eps = 0.0;
    std::string dataset_tag;    // "input" or "test"
    std::string algorithm_tag;  // "composable_points" or "polygon_grid"
    std::size_t summary_size = 0;
    double radius = 0.0;
    long long runtime_ms = 0;
};

io::json reports_to_json(const std::vector<ExperimentReport>& reports);

/// Run the selected pipelines and evaluate every center set against the
/// input points and (optionally) the hull-grid test set.
std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config);

inline constexpr std::size_t kDefaultIngestCap = 50'000;

}  // namespace agu
