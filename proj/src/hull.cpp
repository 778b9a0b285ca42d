#include "pathconv/hull.hpp"

#include <algorithm>

namespace pathconv {

ConvexityCertificate convex_test(const Graph& g, const ResolvedBounds& rb,
                                 const std::vector<int>& s, bool force_generic) {
    const auto set = canonical_vertex_set(g, s);
    auto result = interval(g, rb, set, {.force_generic = force_generic});
    if (result.members == set) return {true, {}, 0, std::nullopt};

    ConvexityCertificate cert;
    cert.convex = false;
    cert.augmenting = std::move(result.members);
    for (int z : cert.augmenting) {
        if (!std::binary_search(set.begin(), set.end(), z)) {
            cert.witness_z = z;
            cert.witness = result.witnesses.at(z);
            break;  // members sorted: first gained vertex is the smallest
        }
    }
    return cert;
}

HullTrace hull(const Graph& g, const ResolvedBounds& rb, const std::vector<int>& s,
               bool force_generic) {
    HullTrace trace;
    trace.stages.push_back(canonical_vertex_set(g, s));
    for (;;) {
        auto next = interval(g, rb, trace.stages.back(),
                             {.force_generic = force_generic, .want_witnesses = false});
        if (next.members == trace.stages.back()) break;
        trace.stages.push_back(std::move(next.members));
    }
    return trace;
}

bool hull_contains(const Graph& g, const ResolvedBounds& rb,
                   const std::vector<int>& s, int z, bool force_generic) {
    g.require_vertex(z);
    auto stage = canonical_vertex_set(g, s);
    for (;;) {
        if (std::binary_search(stage.begin(), stage.end(), z)) return true;
        auto next = interval(g, rb, stage,
                             {.force_generic = force_generic, .want_witnesses = false})
                        .members;
        if (next == stage) return false;
        stage = std::move(next);
    }
}

}  // namespace pathconv
