// aggucluster: k-center clustering of uncertain points modeled as segments
// and polygons, the multi-interval set cover solver behind it, brute-force
// reference oracles, and the check-in experiment pipeline.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "agu/interval_cover.hpp"
#include "agu/io.hpp"
#include "agu/oracle.hpp"
#include "agu/pipeline.hpp"
#include "agu/polygon_clustering.hpp"
#include "agu/segment_clustering.hpp"

namespace {

agu::oracle::OracleReport run_oracle_setcover(const std::string& input) {
    const auto inst = agu::io::instance_from_json(agu::io::read_json_file(input));
    return agu::oracle::brute_set_cover(agu::atomic_decomposition(inst));
}

agu::io::json oracle_report_to_json(const agu::oracle::OracleReport& report) {
    return agu::io::json{{"optimum", report.optimum},
                         {"witness", report.witness},
                         {"search_space", report.search_space_size},
                         {"resolution", report.resolution}};
}

void print_warnings(const agu::PointClustering& result) {
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-center clustering of uncertain segments and polygons"};
    app.require_subcommand(1);

    std::string input, output, mode = "max", config_path, svg_dir, out_path;
    int k = 1;
    double eps = 0.1, resolution = 1e-3;
    bool with_frontier = false, convex = false, arbitrary = false, full = false;
    std::size_t limit = 0;

    // segments
    auto* segments_cmd = app.add_subcommand("segments", "bicriteria k-center of segments");
    segments_cmd->add_option("--mode", mode, "max or min")->check(CLI::IsMember({"max", "min"}));
    segments_cmd->add_option("--k", k, "number of clusters")->required();
    segments_cmd->add_option("--eps", eps, "discretization parameter")->required();
    segments_cmd->add_option("--input", input, "segments JSON")->required();
    segments_cmd->add_option("--output", output, "result JSON")->required();
    segments_cmd->add_flag("--frontier", with_frontier, "include the (r, cover size) frontier");

    // polygons
    auto* polygons_cmd = app.add_subcommand("polygons", "domain-restricted k-center of polygons");
    polygons_cmd->add_option("--mode", mode, "max or min")->check(CLI::IsMember({"max", "min"}));
    polygons_cmd->add_option("--k", k, "number of clusters")->required();
    polygons_cmd->add_option("--eps", eps, "grid resolution parameter")->required();
    polygons_cmd->add_flag("--convex", convex, "convex input (tighter factor)");
    polygons_cmd->add_flag("--arbitrary", arbitrary, "arbitrary simple polygons");
    polygons_cmd->add_option("--input", input, "polygons JSON")->required();
    polygons_cmd->add_option("--output", output, "result JSON")->required();

    // setcover
    auto* setcover_cmd = app.add_subcommand("setcover", "multi-interval set cover");
    setcover_cmd->add_option("--input", input, "instance JSON")->required();
    setcover_cmd->add_option("--output", output, "solution JSON")->required();

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "parse check-ins and summarize hulls");
    ingest_cmd->add_option("--input", input, "tab-separated check-in file")->required();
    ingest_cmd->add_option("--limit", limit, "row cap (default 50000)");
    ingest_cmd->add_flag("--full", full, "lift the 50000-row desk cap");
    ingest_cmd->add_option("--out", out_path, "user summaries JSON")->required();

    // experiment
    auto* experiment_cmd = app.add_subcommand("experiment", "run the clustering comparison");
    experiment_cmd->add_option("--config", config_path, "experiment config JSON")->required();
    experiment_cmd->add_option("--out", out_path, "reports JSON")->required();
    experiment_cmd->add_option("--svg-dir", svg_dir, "directory for SVG figures");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle_cmd->require_subcommand(1);
    auto* oracle_segments = oracle_cmd->add_subcommand("segments", "exhaustive segment k-center");
    oracle_segments->add_option("--mode", mode, "max or min")
        ->check(CLI::IsMember({"max", "min"}));
    oracle_segments->add_option("--k", k, "number of clusters")->required();
    oracle_segments->add_option("--resolution", resolution, "sampling step (max mode)");
    oracle_segments->add_option("--input", input, "segments JSON")->required();
    oracle_segments->add_option("--output", output, "report JSON")->required();
    auto* oracle_polygons = oracle_cmd->add_subcommand("polygons", "exhaustive polygon k-center");
    oracle_polygons->add_option("--mode", mode, "max or min")
        ->check(CLI::IsMember({"max", "min"}));
    oracle_polygons->add_option("--k", k, "number of clusters")->required();
    oracle_polygons->add_option("--resolution", resolution, "candidate grid cell")->required();
    oracle_polygons->add_option("--input", input, "polygons JSON")->required();
    oracle_polygons->add_option("--output", output, "report JSON")->required();
    auto* oracle_setcover = oracle_cmd->add_subcommand("setcover", "exhaustive set cover");
    oracle_setcover->add_option("--input", input, "instance JSON")->required();
    oracle_setcover->add_option("--output", output, "report JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (segments_cmd->parsed()) {
            const auto segments = agu::io::segments_from_json(agu::io::read_json_file(input));
            const auto result = mode == "max" ? agu::max_kcenter_segments(segments, k, eps)
                                              : agu::min_kcenter_segments(segments, k, eps);
            agu::io::write_json_file(output,
                                     agu::io::segment_clustering_to_json(result, with_frontier));
        } else if (polygons_cmd->parsed()) {
            const auto polygons = agu::io::polygons_from_json(agu::io::read_json_file(input));
            agu::PointClustering result;
            if (mode == "min") {
                result = agu::min_kcenter_polygons(polygons, k, eps);
            } else if (convex && !arbitrary) {
                result = agu::max_kcenter_convex(polygons, k, eps);
            } else {
                result = agu::max_kcenter_arbitrary(polygons, k, eps);
            }
            print_warnings(result);
            agu::io::write_json_file(output, agu::io::point_clustering_to_json(result));
        } else if (setcover_cmd->parsed()) {
            const auto inst = agu::io::instance_from_json(agu::io::read_json_file(input));
            const auto ci = agu::atomic_decomposition(inst);
            const auto sol = agu::greedy_set_cover(ci);
            agu::io::write_json_file(output, agu::io::cover_solution_to_json(sol, ci.atoms.size()));
        } else if (ingest_cmd->parsed()) {
            const std::optional<std::size_t> cap =
                limit > 0 ? std::optional<std::size_t>{limit}
                          : (full ? std::optional<std::size_t>{} : agu::kDefaultIngestCap);
            const auto [records, stats] = agu::ingest_checkins(input, cap);
            const auto [users, ratio] = agu::summarize_hulls(records);
            agu::io::json user_arr = agu::io::json::array();
            for (const auto& u : users) {
                user_arr.push_back(agu::io::json{{"user_id", u.user_id},
                                                 {"point_count", u.point_count},
                                                 {"hull", agu::io::to_json(u.hull)}});
            }
            agu::io::json skipped = agu::io::json::object();
            for (const auto& [reason, count] : stats.skipped) skipped[reason] = count;
            agu::io::write_json_file(out_path, agu::io::json{{"users", user_arr},
                                                             {"compression_ratio", ratio},
                                                             {"valid", stats.valid},
                                                             {"skipped", skipped}});
        } else if (experiment_cmd->parsed()) {
            auto cfg = agu::experiment_config_from_json(agu::io::read_json_file(config_path));
            cfg.svg_dir = svg_dir;
            const auto reports = agu::run_experiment(cfg);
            agu::io::write_json_file(out_path, agu::reports_to_json(reports));
            for (const auto& r : reports) {
                std::cout << r.algorithm_tag << " on " << r.dataset_tag
                          << ": radius=" << r.radius << " summary=" << r.summary_size << " ("
                          << r.runtime_ms << " ms)\n";
            }
        } else if (oracle_cmd->parsed()) {
            agu::oracle::OracleReport report;
            if (oracle_segments->parsed()) {
                const auto segments = agu::io::segments_from_json(agu::io::read_json_file(input));
                report = agu::oracle::brute_kcenter_segments(
                    segments, k, mode == "max" ? agu::CoverMode::max : agu::CoverMode::min,
                    resolution);
            } else if (oracle_polygons->parsed()) {
                const auto polygons = agu::io::polygons_from_json(agu::io::read_json_file(input));
                report = agu::oracle::brute_polygon_kcenter(
                    polygons, k, resolution,
                    mode == "max" ? agu::CoverMode::max : agu::CoverMode::min);
            } else {
                report = run_oracle_setcover(input);
            }
            agu::io::write_json_file(output, oracle_report_to_json(report));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
