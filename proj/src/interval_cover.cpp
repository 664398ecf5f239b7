#include "agu/interval_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agu {

namespace {

bool in_union(const IntervalSet& set, double x) {
    for (const auto& iv : set)
        if (iv.contains(x)) return true;
    return false;
}

bool in_any(const MultiIntervalInstance& inst, double x) {
    for (const auto& set : inst.sets)
        if (in_union(set, x)) return true;
    return false;
}

}  // namespace

CoverInstance atomic_decomposition(const MultiIntervalInstance& inst) {
    std::vector<double> endpoints;
    for (const auto& set : inst.sets) {
        for (const auto& iv : set) {
            if (!(iv.lo <= iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
                throw std::invalid_argument("interval must be finite with lo <= hi");
            endpoints.push_back(iv.lo);
            endpoints.push_back(iv.hi);
        }
    }
    CoverInstance ci;
    ci.covers.assign(inst.sets.size(), {});
    if (endpoints.empty()) return ci;

    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    // positive-length atoms between consecutive endpoints
    std::vector<char> span_in_union(endpoints.size() > 0 ? endpoints.size() - 1 : 0, 0);
    for (std::size_t i = 0; i + 1 < endpoints.size(); ++i) {
        const double mid = 0.5 * (endpoints[i] + endpoints[i + 1]);
        if (endpoints[i + 1] > endpoints[i] && in_any(inst, mid)) {
            span_in_union[i] = 1;
            ci.atoms.push_back({endpoints[i], endpoints[i + 1]});
        }
    }
    // isolated points of the union become zero-length atoms
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const bool left = i > 0 && span_in_union[i - 1];
        const bool right = i + 1 < endpoints.size() && span_in_union[i];
        if (!left && !right && in_any(inst, endpoints[i]))
            ci.atoms.push_back({endpoints[i], endpoints[i]});
    }
    std::sort(ci.atoms.begin(), ci.atoms.end(),
              [](const Interval1D& a, const Interval1D& b) { return a.lo < b.lo; });

    // an atom never straddles an endpoint, so midpoint membership decides
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
        for (std::size_t a = 0; a < ci.atoms.size(); ++a) {
            if (in_union(inst.sets[s], ci.atoms[a].mid()))
                ci.covers[s].push_back(static_cast<int>(a));
        }
    }
    return ci;
}

CoverSolution greedy_set_cover(const CoverInstance& ci) {
    const std::size_t n_atoms = ci.atoms.size();
    CoverSolution sol;
    sol.atom_coverage.assign(n_atoms, false);
    std::size_t uncovered = n_atoms;
    while (uncovered > 0) {
        int best_set = -1;
        std::size_t best_gain = 0;
        for (std::size_t s = 0; s < ci.covers.size(); ++s) {
            std::size_t gain = 0;
            for (int a : ci.covers[s])
                if (!sol.atom_coverage[static_cast<std::size_t>(a)]) ++gain;
            if (gain > best_gain) {  // strict: ties keep the lowest index
                best_gain = gain;
                best_set = static_cast<int>(s);
            }
        }
        if (best_set < 0) throw std::runtime_error("infeasible instance");
        sol.chosen.push_back(best_set);
        for (int a : ci.covers[static_cast<std::size_t>(best_set)]) {
            if (!sol.atom_coverage[static_cast<std::size_t>(a)]) {
                sol.atom_coverage[static_cast<std::size_t>(a)] = true;
                --uncovered;
            }
        }
    }
    return sol;
}

CoverSolution multi_interval_set_cover(const MultiIntervalInstance& inst) {
    return greedy_set_cover(atomic_decomposition(inst));
}

MultiIntervalInstance setcover_to_multiinterval(int universe_size,
                                                const std::vector<std::vector<int>>& sets) {
    if (universe_size < 0) throw std::invalid_argument("universe size must be nonnegative");
    MultiIntervalInstance inst;
    inst.sets.reserve(sets.size());
    for (const auto& set : sets) {
        IntervalSet q;
        q.reserve(set.size());
        for (int e : set) {
            if (e < 1 || e > universe_size)
                throw std::invalid_argument("set element out of range 1..n");
            q.push_back({static_cast<double>(e - 1), static_cast<double>(e)});
        }
        inst.sets.push_back(std::move(q));
    }
    return inst;
}

int ply(const MultiIntervalInstance& inst) {
    // +1 events sort before -1 events at equal coordinates, so shared
    // endpoints of closed intervals stack
    std::vector<std::pair<double, int>> events;
    for (const auto& set : inst.sets) {
        for (const auto& iv : set) {
            events.emplace_back(iv.lo, +1);
            events.emplace_back(iv.hi, -1);
        }
    }
    if (events.empty()) throw std::invalid_argument("ply: empty union");
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    int depth = 0, best = 0;
    for (const auto& [x, delta] : events) {
        (void)x;
        depth += delta;
        best = std::max(best, depth);
    }
    return best;
}

}  // namespace agu
