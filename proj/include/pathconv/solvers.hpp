#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathconv/interval.hpp"

namespace pathconv {

struct SolverOptions {
    int size_cap = 12;                  // refuse graphs with more vertices
    std::uint64_t max_candidates = 0;   // 0 = unlimited; abort marks `capped`
};

struct SolverResult {
    int value = 0;
    std::vector<int> optimal_set;   // lexicographically least optimum
    std::uint64_t explored = 0;     // candidate sets examined
    bool capped = false;            // candidate budget aborted the run
    std::string note;               // conventions, e.g. c(G) on n = 1
};

// Vertices z with z not in I(V \ {z}); such a vertex belongs to every
// interval set and every hull set.
std::vector<int> mandatory_vertices(const Graph& g, const ResolvedBounds& rb);

// c(G): size of a maximum convex set other than V. Enumerates candidate
// sets by decreasing size over memoized pair intervals.
SolverResult convexity_number(const Graph& g, const ResolvedBounds& rb,
                              const SolverOptions& opts = {});

// i(G): size of a smallest S with I(S) = V. Increasing-size enumeration
// seeded with the mandatory vertices.
SolverResult interval_number(const Graph& g, const ResolvedBounds& rb,
                             const SolverOptions& opts = {});

// h(G): size of a smallest S with H(S) = V. Same search scheme.
SolverResult hull_number(const Graph& g, const ResolvedBounds& rb,
                         const SolverOptions& opts = {});

}  // namespace pathconv
