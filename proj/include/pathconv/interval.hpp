#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pathconv/graph.hpp"
#include "pathconv/spec.hpp"

namespace pathconv {

// A concrete path certifying that z lies in I(S): a qualifying uv-path with
// u, v in S, together with the bounds row it was checked against.
struct PathWitness {
    int u = 0, v = 0;
    Path path;
    BoundsRow row;

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct IntervalResult {
    std::vector<int> members;             // sorted; always a superset of S
    std::map<int, PathWitness> witnesses; // one per vertex added beyond S
};

struct IntervalOptions {
    bool force_generic = false;  // bypass fast-path dispatch
    bool want_witnesses = true;
};

// True iff a(i,j) <= |p| <= b(i,j) and every chord length lies in
// [c(i,j), d(i,j)], where (i,j) are p's endpoints. Throws InvalidPath.
bool path_satisfies(const Graph& g, const ResolvedBounds& rb, const Path& p);

// Visits every qualifying simple uv-path exactly once, in lexicographic
// order of vertex sequences. Return false from the visitor to stop early.
// Depth-first with pruning: a prefix longer than b, a prefix that cannot
// reach v within b, or a prefix containing an out-of-range chord is
// abandoned (chords inside a prefix are final).
void enumerate_paths(const Graph& g, const ResolvedBounds& rb, int u, int v,
                     const std::function<bool(const Path&)>& visit);
std::vector<Path> enumerate_paths(const Graph& g, const ResolvedBounds& rb,
                                  int u, int v);

// I(S): S plus every vertex lying on a qualifying path between two distinct
// members of S. Witnesses are canonical: the lexicographically least
// qualifying vertex sequence over all pairs, oriented from the smaller
// endpoint. Fast strategies (dispatched on resolved-bound shape) produce
// results identical to generic enumeration.
IntervalResult interval(const Graph& g, const ResolvedBounds& rb,
                        const std::vector<int>& s, const IntervalOptions& opts = {});

struct Membership {
    bool member = false;
    std::optional<PathWitness> witness;  // absent when z is in S
};

// Decides z in I(S) with a targeted search that prunes branches unable to
// visit z, early-exiting on the first qualifying path found.
Membership interval_contains(const Graph& g, const ResolvedBounds& rb,
                             const std::vector<int>& s, int z);

// Validates and canonicalizes a caller-supplied vertex set: checks range,
// sorts, deduplicates.
std::vector<int> canonical_vertex_set(const Graph& g, const std::vector<int>& s);

}  // namespace pathconv
