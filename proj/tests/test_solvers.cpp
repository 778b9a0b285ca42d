#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>

#include "pathconv/hull.hpp"
#include "pathconv/oracle.hpp"
#include "pathconv/solvers.hpp"
#include "support.hpp"

using namespace pathconv;
using namespace testsupport;

namespace {

ResolvedBounds bounds(const std::string& spec, const Graph& g) {
    return resolve_bounds(parse_spec(spec), g);
}

// Exhaustive reference values computed through the oracle's interval.
struct Exhaustive {
    int convexity = 0, interval_num = 0, hull_num = 0;
};

Exhaustive exhaustive_invariants(const Graph& g, const ResolvedBounds& rb) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> pair_mask(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            std::uint64_t m = 0;
            for (int z : oracle::oracle_interval(g, rb, {u, v})) m |= std::uint64_t{1} << (z - 1);
            pair_mask[static_cast<std::size_t>(u) * (n + 1) + v] = m;
        }
    auto step = [&](std::uint64_t set) {
        std::uint64_t out = set;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if ((set >> (u - 1) & 1) && (set >> (v - 1) & 1))
                    out |= pair_mask[static_cast<std::size_t>(u) * (n + 1) + v];
        return out;
    };
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    Exhaustive result;
    result.interval_num = n;
    result.hull_num = n;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
        const int size = std::popcount(set);
        if (step(set) == set && set != full)
            result.convexity = std::max(result.convexity, size);
        if (step(set) == full) result.interval_num = std::min(result.interval_num, size);
        std::uint64_t h = set;
        while (step(h) != h) h = step(h);
        if (h == full) result.hull_num = std::min(result.hull_num, size);
    }
    return result;
}

}  // namespace

TEST_CASE("mandatory vertices: path ends, cycle none") {
    const auto p4 = path_graph(4);
    CHECK(mandatory_vertices(p4, bounds("preset:geodesic", p4)) == std::vector<int>{1, 4});

    const auto c4 = cycle_graph(4);
    CHECK(mandatory_vertices(c4, bounds("preset:geodesic", c4)).empty());

    // definitional check against the oracle on random instances
    for (unsigned seed = 0; seed < 8; ++seed) {
        const auto g = oracle::random_connected_graph(4 + seed % 4, 0.4, 1700 + seed);
        const auto rb = bounds("preset:allpath", g);
        const auto mand = mandatory_vertices(g, rb);
        for (int z = 1; z <= g.vertex_count(); ++z) {
            std::vector<int> rest;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (v != z) rest.push_back(v);
            const auto members = oracle::oracle_interval(g, rb, rest);
            const bool is_mandatory = !std::binary_search(members.begin(), members.end(), z);
            CHECK(is_mandatory == std::binary_search(mand.begin(), mand.end(), z));
        }
    }
}

TEST_CASE("convexity number: anchors") {
    // K4 geodesic: every shortest path is an edge, every proper subset convex
    const auto k4 = complete_graph(4);
    const auto ck4 = convexity_number(k4, bounds("preset:geodesic", k4));
    CHECK(ck4.value == 3);
    CHECK(ck4.optimal_set == std::vector<int>{1, 2, 3});

    const auto p4 = path_graph(4);
    const auto cp4 = convexity_number(p4, bounds("preset:geodesic", p4));
    CHECK(cp4.value == 3);
    CHECK(cp4.optimal_set == std::vector<int>{1, 2, 3});

    // C4 two-step: adjacent pairs are convex, triples are not
    const auto c4 = cycle_graph(4);
    const auto cc4 = convexity_number(c4, bounds("preset:p3", c4));
    CHECK(cc4.value == 2);
    CHECK(cc4.optimal_set == std::vector<int>{1, 2});

    // single-vertex convention
    const Graph k1(1, {});
    const auto ck1 = convexity_number(k1, bounds("preset:geodesic", k1));
    CHECK(ck1.value == 0);
    CHECK_FALSE(ck1.note.empty());
}

TEST_CASE("interval and hull numbers: anchors") {
    const auto k4 = complete_graph(4);
    const auto geo_k4 = bounds("preset:geodesic", k4);
    CHECK(interval_number(k4, geo_k4).value == 4);
    CHECK(hull_number(k4, geo_k4).value == 4);

    const auto p4 = path_graph(4);
    const auto geo_p4 = bounds("preset:geodesic", p4);
    const auto ip4 = interval_number(p4, geo_p4);
    CHECK(ip4.value == 2);
    CHECK(ip4.optimal_set == std::vector<int>{1, 4});
    CHECK(hull_number(p4, geo_p4).value == 2);

    const auto c4 = cycle_graph(4);
    const auto geo_c4 = bounds("preset:geodesic", c4);
    const auto ic4 = interval_number(c4, geo_c4);
    CHECK(ic4.value == 2);
    CHECK(ic4.optimal_set == std::vector<int>{1, 3});
    CHECK(hull_number(c4, geo_c4).value == 2);

    // C5 monophonic: any nonadjacent pair hulls to everything
    const auto c5 = cycle_graph(5);
    CHECK(hull_number(c5, bounds("preset:monophonic", c5)).value == 2);
}

TEST_CASE("solver results certify themselves") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        const auto g = oracle::random_connected_graph(4 + seed % 4, 0.5, 1800 + seed);
        for (const char* spec : {"preset:geodesic", "preset:monophonic", "preset:p3"}) {
            const auto rb = bounds(spec, g);
            const auto mand = mandatory_vertices(g, rb);

            const auto cn = convexity_number(g, rb);
            if (cn.value > 0) {
                CHECK(static_cast<int>(cn.optimal_set.size()) == cn.value);
                CHECK(convex_test(g, rb, cn.optimal_set).convex);
                CHECK(cn.optimal_set != all_vertices(g));
            }

            const auto in = interval_number(g, rb);
            CHECK(interval(g, rb, in.optimal_set, {.want_witnesses = false}).members ==
                  all_vertices(g));
            CHECK(std::includes(in.optimal_set.begin(), in.optimal_set.end(), mand.begin(),
                                mand.end()));

            const auto hn = hull_number(g, rb);
            CHECK(hull(g, rb, hn.optimal_set).hull() == all_vertices(g));
            CHECK(std::includes(hn.optimal_set.begin(), hn.optimal_set.end(), mand.begin(),
                                mand.end()));

            CHECK(hn.value <= in.value);
        }
    }
}

TEST_CASE("solvers match exhaustive enumeration") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        const auto g = oracle::random_connected_graph(4 + seed % 4, 0.5, 1900 + seed);
        for (const char* spec : {"preset:geodesic", "preset:p3", "preset:triangle"}) {
            const auto rb = bounds(spec, g);
            const auto expected = exhaustive_invariants(g, rb);
            CHECK(convexity_number(g, rb).value == expected.convexity);
            CHECK(interval_number(g, rb).value == expected.interval_num);
            CHECK(hull_number(g, rb).value == expected.hull_num);
        }
    }
}

TEST_CASE("minimality: no smaller set containing the mandatory vertices works") {
    for (unsigned seed = 0; seed < 6; ++seed) {
        const auto g = oracle::random_connected_graph(5 + seed % 3, 0.4, 2000 + seed);
        const auto rb = bounds("preset:geodesic", g);
        const auto in = interval_number(g, rb);
        const int n = g.vertex_count();
        for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
            if (std::popcount(set) != in.value - 1) continue;
            std::vector<int> candidate;
            for (int v = 1; v <= n; ++v)
                if (set >> (v - 1) & 1) candidate.push_back(v);
            CHECK(interval(g, rb, candidate, {.want_witnesses = false}).members !=
                  all_vertices(g));
        }
    }
}

TEST_CASE("size cap and candidate budget") {
    const auto g = oracle::random_connected_graph(13, 0.3, 7);
    CHECK_THROWS_AS((void)convexity_number(g, bounds("preset:geodesic", g)), const Error&);

    const auto c6 = cycle_graph(6);
    SolverOptions tight;
    tight.max_candidates = 2;
    const auto capped = interval_number(c6, bounds("preset:geodesic", c6), tight);
    CHECK(capped.capped);
    CHECK_FALSE(capped.note.empty());

    SolverOptions raised;
    raised.size_cap = 13;
    CHECK(interval_number(g, bounds("preset:geodesic", g), raised).value >= 1);
}
