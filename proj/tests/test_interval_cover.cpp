#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "agu/interval_cover.hpp"
#include "agu/oracle.hpp"

using namespace agu;

namespace {

MultiIntervalInstance make_instance(std::vector<IntervalSet> sets) {
    MultiIntervalInstance inst;
    inst.sets = std::move(sets);
    return inst;
}

double union_measure(const std::vector<Interval1D>& intervals) {
    std::vector<Interval1D> sorted = intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval1D& a, const Interval1D& b) { return a.lo < b.lo; });
    double total = 0.0, cur_lo = 0.0, cur_hi = -1.0;
    bool open = false;
    for (const auto& iv : sorted) {
        if (!open || iv.lo > cur_hi) {
            if (open) total += cur_hi - cur_lo;
            cur_lo = iv.lo;
            cur_hi = iv.hi;
            open = true;
        } else {
            cur_hi = std::max(cur_hi, iv.hi);
        }
    }
    if (open) total += cur_hi - cur_lo;
    return total;
}

MultiIntervalInstance random_instance(std::mt19937& rng, int max_sets, int max_intervals) {
    std::uniform_int_distribution<int> n_sets(1, max_sets);
    std::uniform_int_distribution<int> n_ivs(0, max_intervals);
    std::uniform_int_distribution<int> coord(0, 20);
    MultiIntervalInstance inst;
    const int n = n_sets(rng);
    bool any = false;
    for (int s = 0; s < n; ++s) {
        IntervalSet set;
        const int m = n_ivs(rng);
        for (int i = 0; i < m; ++i) {
            int lo = coord(rng), hi = coord(rng);
            if (lo > hi) std::swap(lo, hi);
            set.push_back({static_cast<double>(lo), static_cast<double>(hi)});
            any = true;
        }
        inst.sets.push_back(std::move(set));
    }
    if (!any) inst.sets[0].push_back({0.0, 1.0});
    return inst;
}

}  // namespace

TEST_CASE("atomic decomposition cuts at every endpoint") {
    const auto ci = atomic_decomposition(make_instance({{{0, 2}}, {{1, 3}}}));
    REQUIRE(ci.atoms.size() == 3);
    CHECK(ci.atoms[0].lo == doctest::Approx(0.0));
    CHECK(ci.atoms[0].hi == doctest::Approx(1.0));
    CHECK(ci.atoms[1].hi == doctest::Approx(2.0));
    CHECK(ci.atoms[2].hi == doctest::Approx(3.0));
    CHECK(ci.covers[0] == std::vector<int>{0, 1});
    CHECK(ci.covers[1] == std::vector<int>{1, 2});
}

TEST_CASE("atomic decomposition trivial cases") {
    const auto single = atomic_decomposition(make_instance({{{0, 1}}}));
    REQUIRE(single.atoms.size() == 1);
    CHECK(single.covers[0] == std::vector<int>{0});

    const auto disjoint = atomic_decomposition(make_instance({{{0, 1}}, {{2, 3}}}));
    REQUIRE(disjoint.atoms.size() == 2);
    CHECK(disjoint.covers[0] == std::vector<int>{0});
    CHECK(disjoint.covers[1] == std::vector<int>{1});
}

TEST_CASE("zero-length atoms appear only as isolated points") {
    const auto ci = atomic_decomposition(make_instance({{{0.5, 0.5}}, {{2, 3}}}));
    REQUIRE(ci.atoms.size() == 2);
    CHECK(ci.atoms[0].lo == doctest::Approx(0.5));
    CHECK(ci.atoms[0].hi == doctest::Approx(0.5));
    // an endpoint interior to the union does not become its own atom
    const auto dense = atomic_decomposition(make_instance({{{0, 1}}, {{1, 1}}, {{1, 2}}}));
    CHECK(dense.atoms.size() == 2);
    CHECK(dense.covers[1] == std::vector<int>{});  // [1,1] covers no positive atom
}

TEST_CASE("greedy set cover picks the largest gain, lowest index on ties") {
    CoverInstance ci;
    ci.atoms = {{0, 1}, {1, 2}, {2, 3}};
    ci.covers = {{0, 1}, {1, 2}, {2}};
    const auto sol = greedy_set_cover(ci);
    CHECK(sol.chosen == std::vector<int>{0, 1});
    CHECK(std::all_of(sol.atom_coverage.begin(), sol.atom_coverage.end(),
                      [](bool b) { return b; }));

    CoverInstance all;
    all.atoms = {{0, 1}, {1, 2}};
    all.covers = {{0, 1}};
    CHECK(greedy_set_cover(all).chosen.size() == 1);

    CoverInstance forced;
    forced.atoms = {{0, 1}, {1, 2}, {2, 3}};
    forced.covers = {{0}, {1}, {2}};
    CHECK(greedy_set_cover(forced).chosen.size() == 3);

    CoverInstance infeasible;
    infeasible.atoms = {{0, 1}};
    infeasible.covers = {{}};
    CHECK_THROWS_WITH_AS(greedy_set_cover(infeasible), doctest::Contains("infeasible"),
                         std::runtime_error);
}

TEST_CASE("multi-interval set cover end to end") {
    // Q3 alone misses the middle stretch, so two sets are needed
    const auto inst = make_instance({{{0, 2}}, {{1, 3}}, {{0, 1}, {2, 3}}});
    const auto sol = multi_interval_set_cover(inst);
    CHECK(sol.chosen.size() == 2);
    const auto report = oracle::brute_set_cover(atomic_decomposition(inst));
    CHECK(report.optimum == doctest::Approx(2.0));

    // one set equal to the whole union
    const auto easy = make_instance({{{0, 5}}, {{1, 2}}});
    CHECK(multi_interval_set_cover(easy).chosen.size() == 1);
}

TEST_CASE("an interval inside the union of two others is redundant") {
    const auto inst = make_instance({{{0, 1}}, {{1, 2}}, {{0.5, 1.5}}});
    const auto sol = multi_interval_set_cover(inst);
    CHECK(sol.chosen.size() == 2);
    CHECK(std::find(sol.chosen.begin(), sol.chosen.end(), 2) == sol.chosen.end());
    CHECK(oracle::brute_set_cover(atomic_decomposition(inst)).optimum == doctest::Approx(2.0));
}

TEST_CASE("set cover reduction maps elements to unit intervals") {
    const auto inst = setcover_to_multiinterval(3, {{1, 2}, {2, 3}, {3}});
    REQUIRE(inst.sets.size() == 3);
    CHECK(inst.sets[0][0].lo == doctest::Approx(0.0));
    CHECK(inst.sets[0][0].hi == doctest::Approx(1.0));
    CHECK(inst.sets[2][0].lo == doctest::Approx(2.0));

    // optimum is preserved
    const auto report = oracle::brute_set_cover(atomic_decomposition(inst));
    CHECK(report.optimum == doctest::Approx(2.0));

    const auto single = setcover_to_multiinterval(1, {{1}});
    CHECK(single.sets[0][0].hi == doctest::Approx(1.0));

    const auto with_empty = setcover_to_multiinterval(2, {{1, 2}, {}});
    CHECK(with_empty.sets[1].empty());
    CHECK(oracle::brute_set_cover(atomic_decomposition(with_empty)).optimum ==
          doctest::Approx(1.0));

    CHECK_THROWS(setcover_to_multiinterval(2, {{3}}));
    CHECK_THROWS(setcover_to_multiinterval(2, {{0}}));
}

TEST_CASE("reduction preserves exhaustive optima on random abstract instances") {
    std::mt19937 rng(41);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int n_sets = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(n_sets));
        for (int e = 1; e <= n; ++e) {
            // every element lands somewhere, instances stay feasible
            sets[rng() % static_cast<std::size_t>(n_sets)].push_back(e);
        }
        for (auto& s : sets)
            if (!s.empty() && rng() % 2 == 0) s.push_back(1 + static_cast<int>(rng() % n));

        // abstract exhaustive optimum
        int best = n_sets + 1;
        for (unsigned mask = 1; mask < (1u << n_sets); ++mask) {
            std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
            int count = 0;
            for (int s = 0; s < n_sets; ++s) {
                if (!(mask & (1u << s))) continue;
                ++count;
                for (int e : sets[static_cast<std::size_t>(s)])
                    hit[static_cast<std::size_t>(e)] = true;
            }
            bool full = true;
            for (int e = 1; e <= n; ++e) full = full && hit[static_cast<std::size_t>(e)];
            if (full) best = std::min(best, count);
        }

        const auto image = setcover_to_multiinterval(n, sets);
        const auto report = oracle::brute_set_cover(atomic_decomposition(image));
        CHECK(report.optimum == doctest::Approx(static_cast<double>(best)));
    }
}

TEST_CASE("ply by endpoint sweep") {
    CHECK(ply(make_instance({{{0, 1}}, {{2, 3}}})) == 1);
    CHECK(ply(make_instance({{{0, 2}}, {{1, 3}}, {{1.5, 2.5}}})) == 3);
    const auto copies = make_instance({{{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}});
    CHECK(ply(copies) == 4);
    // closed intervals sharing one endpoint stack there
    CHECK(ply(make_instance({{{0, 1}}, {{1, 2}}})) == 2);
    CHECK_THROWS(ply(make_instance({{}})));
}

TEST_CASE("coverage soundness and lossless decomposition on random instances") {
    std::mt19937 rng(97);
    for (int round = 0; round < 120; ++round) {
        const auto inst = random_instance(rng, 8, 4);
        const auto ci = atomic_decomposition(inst);
        const auto sol = greedy_set_cover(ci);

        // every atom midpoint lies inside some chosen set
        for (const auto& atom : ci.atoms) {
            bool covered = false;
            for (int s : sol.chosen) {
                for (const auto& iv : inst.sets[static_cast<std::size_t>(s)])
                    covered = covered || iv.contains(atom.mid());
            }
            CHECK(covered);
        }

        // lebesgue measure of the atoms equals the measure of the input union
        std::vector<Interval1D> all;
        for (const auto& s : inst.sets) all.insert(all.end(), s.begin(), s.end());
        CHECK(std::abs(union_measure(ci.atoms) - union_measure(all)) <= 1e-9);

        // and per set, the covered atoms reproduce that set's own union
        for (std::size_t s = 0; s < inst.sets.size(); ++s) {
            std::vector<Interval1D> covered;
            for (int a : ci.covers[s]) covered.push_back(ci.atoms[static_cast<std::size_t>(a)]);
            CHECK(std::abs(union_measure(covered) - union_measure(inst.sets[s])) <= 1e-9);
        }

        // determinism
        const auto again = greedy_set_cover(ci);
        CHECK(again.chosen == sol.chosen);

        // greedy within the harmonic bound of the exhaustive optimum
        const auto report = oracle::brute_set_cover(ci);
        const double bound =
            (std::log(static_cast<double>(std::max<std::size_t>(ci.atoms.size(), 1))) + 1.0) *
            report.optimum;
        CHECK(static_cast<double>(sol.chosen.size()) <= bound + 1e-9);
    }
}
