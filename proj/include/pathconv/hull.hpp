#pragma once

#include <optional>
#include <vector>

#include "pathconv/interval.hpp"

namespace pathconv {

// Outcome of a convexity test. When S is not convex the certificate carries
// the augmenting set I(S) and a witness for the smallest vertex gained.
struct ConvexityCertificate {
    bool convex = false;
    std::vector<int> augmenting;          // I(S) when not convex, else empty
    int witness_z = 0;                    // smallest vertex gained
    std::optional<PathWitness> witness;
};

ConvexityCertificate convex_test(const Graph& g, const ResolvedBounds& rb,
                                 const std::vector<int>& s, bool force_generic = false);

// The chain S = I^0(S) c I^1(S) c ... up to the fixed point H(S). Stages are
// strictly increasing; the final stage is the hull.
struct HullTrace {
    std::vector<std::vector<int>> stages;

    const std::vector<int>& hull() const { return stages.back(); }
    int iterations() const { return static_cast<int>(stages.size()) - 1; }
};

HullTrace hull(const Graph& g, const ResolvedBounds& rb, const std::vector<int>& s,
               bool force_generic = false);

// z in H(S)? Iterates lazily and short-circuits as soon as z enters a stage.
bool hull_contains(const Graph& g, const ResolvedBounds& rb,
                   const std::vector<int>& s, int z, bool force_generic = false);

}  // namespace pathconv
