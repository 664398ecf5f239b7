#pragma once

#include <vector>

namespace agu {

struct Interval1D {
    double lo = 0.0;
    double hi = 0.0;  // closed interval, lo <= hi
    double length() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

using IntervalSet = std::vector<Interval1D>;

/// n sets of closed 1D intervals; the implicit universe is the union of all
/// of them. Empty sets are permitted.
struct MultiIntervalInstance {
    std::vector<IntervalSet> sets;
};

/// Discrete view produced by cutting the union at every interval endpoint:
/// `atoms` are pairwise interior-disjoint and `covers[i]` lists the atoms
/// entirely inside the union of set i.
struct CoverInstance {
    std::vector<Interval1D> atoms;
    std::vector<std::vector<int>> covers;
};

struct CoverSolution {
    std::vector<int> chosen;          // set indices, in greedy pick order
    std::vector<bool> atom_coverage;  // all true on success
};

/// Cut the union of all intervals at every endpoint. Zero-length atoms are
/// emitted only for isolated points of the union (degenerate inputs);
/// everywhere else consecutive endpoints span the atoms.
CoverInstance atomic_decomposition(const MultiIntervalInstance& inst);

/// Largest-uncovered-count greedy; ties go to the lowest set index. Throws
/// on an atom no set covers.
CoverSolution greedy_set_cover(const CoverInstance& ci);

CoverSolution multi_interval_set_cover(const MultiIntervalInstance& inst);

/// The executable reduction from abstract set cover: universe element i
/// (1-based, i in 1..n) becomes the interval [i-1, i]. Optima of the two
/// instances coincide.
MultiIntervalInstance setcover_to_multiinterval(int universe_size,
                                                const std::vector<std::vector<int>>& sets);

/// Maximum number of input intervals containing any single point of the
/// union; computed by an endpoint sweep.
int ply(const MultiIntervalInstance& inst);

}  // namespace agu
