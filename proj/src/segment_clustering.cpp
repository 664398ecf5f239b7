#include "agu/segment_clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace agu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxSamplePoints = 4000;

void require_nonempty(const std::vector<Segment2D>& segments) {
    if (segments.empty()) throw std::invalid_argument("segment set is empty");
}

}  // namespace

std::pair<int, double> max_1center_segments(const std::vector<Segment2D>& segments) {
    require_nonempty(segments);
    int best = 0;
    double best_cost = kInf;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::vector<Segment2D> center{segments[i]};
        double cost = 0.0;
        for (const auto& s : segments)
            cost = std::max(cost, segment_to_centers_distance(s, center));
        if (cost < best_cost) {
            best_cost = cost;
            best = static_cast<int>(i);
        }
    }
    return {best, best_cost};
}

std::pair<int, double> min_1center_segments(const std::vector<Segment2D>& segments) {
    require_nonempty(segments);
    int best = 0;
    double best_cost = kInf;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        double cost = 0.0;
        for (const auto& s : segments)
            cost = std::max(cost, segment_min_distance(s, segments[i]));
        if (cost < best_cost) {
            best_cost = cost;
            best = static_cast<int>(i);
        }
    }
    return {best, best_cost};
}

double clamp_discretization_step(const std::vector<Segment2D>& segments, double eps) {
    double d_min = kInf;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            const double d = segment_min_distance(segments[i], segments[j]);
            if (d > kTol) d_min = std::min(d_min, d);
        }
    }
    if (d_min < kInf) return std::min(eps, 0.5 * d_min);
    return eps;
}

RadiiSet candidate_radii(const std::vector<Segment2D>& segments, double eps) {
    require_nonempty(segments);
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    std::vector<Point2D> samples;
    for (const auto& s : segments) {
        const double len = s.length();
        const auto steps = static_cast<std::size_t>(std::floor(len / eps + 1e-9));
        for (std::size_t i = 0; i <= steps; ++i)
            samples.push_back(s.at(len > 0.0 ? std::min(1.0, (static_cast<double>(i) * eps) / len)
                                             : 0.0));
        if (static_cast<double>(steps) * eps < len * (1.0 - 1e-9)) samples.push_back(s.b);
        if (samples.size() > kMaxSamplePoints)
            throw std::invalid_argument("eps too small: discretization exceeds sample cap");
    }

    RadiiSet out;
    out.eps = eps;
    out.radii.reserve(samples.size() * (samples.size() - 1) / 2);
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            out.radii.push_back(point_distance(samples[i], samples[j]));
    std::sort(out.radii.begin(), out.radii.end());
    out.radii.erase(std::unique(out.radii.begin(), out.radii.end(),
                                [](double a, double b) { return std::abs(a - b) <= kTol; }),
                    out.radii.end());
    return out;
}

namespace {

// Offset of segment j on the shared 1D parameter universe.
std::vector<double> universe_bases(const std::vector<Segment2D>& segments) {
    double max_len = 0.0;
    for (const auto& s : segments) max_len = std::max(max_len, s.length());
    std::vector<double> bases(segments.size());
    for (std::size_t j = 0; j < segments.size(); ++j)
        bases[j] = static_cast<double>(j) * (max_len + 1.0);
    return bases;
}

}  // namespace

namespace {

MultiIntervalInstance build_cover_instance(const std::vector<Segment2D>& segments, double r,
                                           CoverMode mode) {
    require_nonempty(segments);
    if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
    const std::vector<double> bases = universe_bases(segments);

    MultiIntervalInstance inst;
    inst.sets.resize(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Stadium st{segments[i], r};
        for (std::size_t j = 0; j < segments.size(); ++j) {
            const double len = segments[j].length();
            if (mode == CoverMode::max) {
                const auto iv = clip_segment_param_interval(segments[j], st);
                if (!iv) continue;
                inst.sets[i].push_back(
                    {bases[j] + iv->first * len, bases[j] + iv->second * len});
            } else {
                if (segment_min_distance(segments[i], segments[j]) <= r + kTol)
                    inst.sets[i].push_back({bases[j], bases[j] + len});
            }
        }
    }
    return inst;
}

}  // namespace

std::pair<MultiIntervalInstance, CoverSolution>
reduce_max_to_cover(const std::vector<Segment2D>& segments, double r) {
    MultiIntervalInstance inst = build_cover_instance(segments, r, CoverMode::max);
    CoverSolution sol = multi_interval_set_cover(inst);
    return {std::move(inst), std::move(sol)};
}

std::pair<MultiIntervalInstance, CoverSolution>
reduce_min_to_cover(const std::vector<Segment2D>& segments, double r) {
    MultiIntervalInstance inst = build_cover_instance(segments, r, CoverMode::min);
    CoverSolution sol = multi_interval_set_cover(inst);
    return {std::move(inst), std::move(sol)};
}

namespace {

double achieved_radius(const std::vector<Segment2D>& segments,
                       const std::vector<int>& centers, CoverMode mode) {
    std::vector<Segment2D> center_segments;
    center_segments.reserve(centers.size());
    for (int c : centers) center_segments.push_back(segments[static_cast<std::size_t>(c)]);
    double worst = 0.0;
    for (const auto& s : segments) {
        if (mode == CoverMode::max) {
            worst = std::max(worst, segment_to_centers_distance(s, center_segments));
        } else {
            double best = kInf;
            for (const auto& c : center_segments)
                best = std::min(best, segment_min_distance(s, c));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

int greedy_size_bound(int k, std::size_t atoms) {
    const double u = std::max<std::size_t>(atoms, 1);
    return k * static_cast<int>(std::ceil(std::log(u) + 1.0));
}

SegmentClustering kcenter_driver(const std::vector<Segment2D>& segments, int k, double eps,
                                 CoverMode mode) {
    require_nonempty(segments);
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<std::size_t>(k) > segments.size())
        throw std::invalid_argument("k exceeds the number of segments");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    auto [norm_segments, transform] = normalize_segments(segments);

    // the pairwise clamp keeps the discretization fine enough to resolve
    // small optima, but nearly-touching segments would drive it to an
    // unusable density; a fixed sample budget floors the step and the exact
    // pairwise distances below restore resolution where it matters
    double total_len = 0.0;
    for (const auto& s : norm_segments) total_len += s.length();
    constexpr double kSampleBudget = 192.0;
    double step = clamp_discretization_step(norm_segments, eps);
    if (total_len > 0.0) step = std::max(step, total_len / kSampleBudget);
    step = std::min(step, eps);

    RadiiSet radii = candidate_radii(norm_segments, step);
    // exact candidate radii: with these, the min-mode optimum (always a
    // pairwise minimum distance) and the max-mode 1-center optimum (always
    // an endpoint-to-segment distance) appear in the scan verbatim
    radii.radii.push_back(0.0);
    for (std::size_t i = 0; i < norm_segments.size(); ++i) {
        for (std::size_t j = 0; j < norm_segments.size(); ++j) {
            if (i == j) continue;
            radii.radii.push_back(point_segment_distance(norm_segments[i].a, norm_segments[j]));
            radii.radii.push_back(point_segment_distance(norm_segments[i].b, norm_segments[j]));
            if (j > i)
                radii.radii.push_back(segment_min_distance(norm_segments[i], norm_segments[j]));
        }
    }
    std::sort(radii.radii.begin(), radii.radii.end());
    radii.radii.erase(std::unique(radii.radii.begin(), radii.radii.end(),
                                  [](double a, double b) { return std::abs(a - b) <= kTol; }),
                      radii.radii.end());
    if (radii.radii.empty()) radii.radii.push_back(0.0);

    SegmentClustering result;
    result.mode = mode;
    bool accepted = false;
    // A cover found at some radius stays feasible at every larger radius
    // (stadiums only grow), so the best cover so far carries forward; this
    // keeps the frontier non-increasing even when plain greedy stumbles on
    // a larger instance.
    std::vector<int> best_cover;
    for (double r : radii.radii) {
        if (best_cover.size() == 1) {
            // min-so-far is already 1; greedy cannot go lower
            result.frontier.push_back({transform.radius_to_input(r), 1});
            continue;
        }
        const MultiIntervalInstance inst = build_cover_instance(norm_segments, r, mode);
        const CoverInstance ci = atomic_decomposition(inst);
        const CoverSolution sol = greedy_set_cover(ci);
        if (best_cover.empty() || sol.chosen.size() < best_cover.size())
            best_cover = sol.chosen;
        const int size = static_cast<int>(best_cover.size());
        result.frontier.push_back({transform.radius_to_input(r), size});
        if (!accepted && size <= greedy_size_bound(k, ci.atoms.size())) {
            accepted = true;
            result.center_indices = best_cover;
            std::sort(result.center_indices.begin(), result.center_indices.end());
            result.selected_radius = transform.radius_to_input(r);
            result.universe_atoms = static_cast<int>(ci.atoms.size());
            result.cover_bound = greedy_size_bound(k, ci.atoms.size());
        }
    }
    if (!accepted)
        throw std::runtime_error("no candidate radius accepted");  // unreachable: the largest
                                                                   // radius covers everything
    result.radius = achieved_radius(segments, result.center_indices, mode);
    return result;
}

}  // namespace

SegmentClustering max_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                       double eps) {
    return kcenter_driver(segments, k, eps, CoverMode::max);
}

SegmentClustering min_kcenter_segments(const std::vector<Segment2D>& segments, int k,
                                       double eps) {
    return kcenter_driver(segments, k, eps, CoverMode::min);
}

}  // namespace agu
