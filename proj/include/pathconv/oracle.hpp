#pragma once

#include <vector>

#include "pathconv/graph.hpp"
#include "pathconv/spec.hpp"

namespace pathconv::oracle {

// Independent brute-force reference implementations for differential
// testing. Deliberately filter-after-enumerate with no pruning, sharing no
// path-search logic with the interval engine.

inline constexpr int kDefaultOracleCap = 10;
inline constexpr int kDefaultFamilyCap = 12;

// Same contract as pathconv::interval, members only: enumerates *all*
// simple uv-paths per pair and filters afterward.
std::vector<int> oracle_interval(const Graph& g, const ResolvedBounds& rb,
                                 const std::vector<int>& s,
                                 int vertex_cap = kDefaultOracleCap);

// All convex sets of (g, rb), each as a sorted vertex list, in
// lexicographic order (the empty set first).
std::vector<std::vector<int>> enumerate_convex_sets(const Graph& g,
                                                    const ResolvedBounds& rb,
                                                    int vertex_cap = kDefaultFamilyCap);

// True iff some induced (chordless) ij-path of h contains z. Exhaustive.
bool chordless_path_through(const Graph& h, int i, int j, int z,
                            int vertex_cap = kDefaultOracleCap);

// Hardness-reduction gadget: G subdivides every edge of h incident to z
// with n-1 internal vertices (n = |V(h)|); the matrix spec demands
// chordless ij-paths of length in [2n, 3n-3]; S = {i, j}. The defining
// equivalence: S is not convex in G under the gadget spec iff h has a
// chordless ij-path through z.
struct GadgetInstance {
    Graph graph;                // the subdivided graph G
    ConvexitySpec spec;         // matrix mode, sized for G
    std::vector<int> s;         // {i, j}
    std::vector<int> h_to_g;    // h_to_g[w] = label of h's vertex w in G
    int base_n = 0;             // |V(h)|
};

GadgetInstance build_mcs_gadget(const Graph& h, int i, int j, int z);

// Deterministic for fixed (n, p, seed): a uniform random recursive spanning
// tree plus each remaining pair independently with probability p. The
// generator does not depend on library distribution internals.
Graph random_connected_graph(int n, double p, unsigned seed);

}  // namespace pathconv::oracle
