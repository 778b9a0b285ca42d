#pragma once

// Small graph builders and test-side reference routines. These references are
// deliberately written from the definitions, independent of both the engine
// and the oracle module, so they can sit on the other side of a differential
// check.

#include <algorithm>
#include <vector>

#include "pathconv/graph.hpp"
#include "pathconv/spec.hpp"

namespace testsupport {

inline pathconv::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return pathconv::Graph(n, edges);
}

inline pathconv::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return pathconv::Graph(n, edges);
}

inline pathconv::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return pathconv::Graph(n, edges);
}

// Star with center 1 and `leaves` leaves.
inline pathconv::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
    return pathconv::Graph(leaves + 1, edges);
}

// Every simple uv-path, plain recursion, no pruning.
inline std::vector<std::vector<int>> ref_simple_paths(const pathconv::Graph& g, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<char> used(g.vertex_count() + 1, 0);
    used[u] = 1;
    auto rec = [&](auto&& self, int cur) -> void {
        if (cur == v) {
            out.push_back(path);
            return;
        }
        for (int w : g.neighbors(cur)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    rec(rec, u);
    return out;
}

inline bool ref_is_chordless(const pathconv::Graph& g, const std::vector<int>& path) {
    for (std::size_t s = 0; s < path.size(); ++s)
        for (std::size_t t = s + 2; t < path.size(); ++t)
            if (g.adjacent(path[s], path[t])) return false;
    return true;
}

// Does `path` satisfy the resolved bounds row of its endpoints?
inline bool ref_qualifies(const pathconv::Graph& g, const pathconv::ResolvedBounds& rb,
                          const std::vector<int>& path) {
    const int u = path.front(), v = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (len < rb.a(u, v) || len > rb.b(u, v)) return false;
    for (std::size_t s = 0; s < path.size(); ++s)
        for (std::size_t t = s + 2; t < path.size(); ++t)
            if (g.adjacent(path[s], path[t])) {
                const int lambda = static_cast<int>(t - s);
                if (lambda < rb.c(u, v) || lambda > rb.d(u, v)) return false;
            }
    return true;
}

// Eq.-style interval, computed through ref_simple_paths + ref_qualifies.
inline std::vector<int> ref_interval(const pathconv::Graph& g, const pathconv::ResolvedBounds& rb,
                                     const std::vector<int>& s) {
    std::vector<char> member(g.vertex_count() + 1, 0);
    for (int v : s) member[v] = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (const auto& path : ref_simple_paths(g, s[i], s[j]))
                if (ref_qualifies(g, rb, path))
                    for (int z : path) member[z] = 1;
    std::vector<int> out;
    for (int z = 1; z <= g.vertex_count(); ++z)
        if (member[z]) out.push_back(z);
    return out;
}

inline std::vector<int> ref_geodesic_interval(const pathconv::Graph& g,
                                              const std::vector<int>& s) {
    const auto dist = pathconv::all_pairs_distances(g);
    std::vector<char> member(g.vertex_count() + 1, 0);
    for (int v : s) member[v] = 1;
    for (int z = 1; z <= g.vertex_count(); ++z)
        for (std::size_t i = 0; i < s.size() && !member[z]; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (dist(s[i], z) + dist(z, s[j]) == dist(s[i], s[j])) {
                    member[z] = 1;
                    break;
                }
    std::vector<int> out;
    for (int z = 1; z <= g.vertex_count(); ++z)
        if (member[z]) out.push_back(z);
    return out;
}

inline std::vector<int> ref_two_step_interval(const pathconv::Graph& g, const std::vector<int>& s,
                                              bool require_nonadjacent) {
    std::vector<char> in_s(g.vertex_count() + 1, 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> out;
    for (int z = 1; z <= g.vertex_count(); ++z) {
        bool member = in_s[z];
        if (!member) {
            std::vector<int> nbrs;
            for (int w : g.neighbors(z))
                if (in_s[w]) nbrs.push_back(w);
            for (std::size_t i = 0; i < nbrs.size() && !member; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && !member; ++j)
                    member = !require_nonadjacent || !g.adjacent(nbrs[i], nbrs[j]);
        }
        if (member) out.push_back(z);
    }
    return out;
}

inline std::vector<int> all_vertices(const pathconv::Graph& g) {
    std::vector<int> out(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) out[v - 1] = v;
    return out;
}

}  // namespace testsupport
