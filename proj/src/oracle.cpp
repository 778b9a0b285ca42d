#include "pathconv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pathconv::oracle {

namespace {

void require_oracle_size(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        fail(ErrorCode::SizeLimitExceeded,
             std::string(what) + " enumerates every simple path and supports at most " +
                 std::to_string(cap) + " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Every simple uv-path, no pruning of any kind. The engine must never share
// this search: a pruning bug over there has to surface as a disagreement.
template <typename Visit>
void every_simple_path(const Graph& g, int u, int v, Visit&& visit) {
    std::vector<int> path{u};
    std::vector<char> used(g.vertex_count() + 1, 0);
    used[u] = 1;
    auto rec = [&](auto&& self, int cur) -> void {
        if (cur == v) {
            visit(path);
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
}

// Independent re-check of conditions (length window, chord window), written
// against the raw vertex sequence.
bool qualifies(const Graph& g, const ResolvedBounds& rb, const std::vector<int>& path) {
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

std::uint64_t pair_union_mask(const Graph& g, const ResolvedBounds& rb, int u, int v) {
    std::uint64_t mask = 0;
    every_simple_path(g, u, v, [&](const std::vector<int>& path) {
        if (!qualifies(g, rb, path)) return;
        for (int z : path) mask |= std::uint64_t{1} << (z - 1);
    });
    return mask;
}

}  // namespace

std::vector<int> oracle_interval(const Graph& g, const ResolvedBounds& rb,
                                 const std::vector<int>& s, int vertex_cap) {
    require_oracle_size(g, vertex_cap, "oracle_interval");
    const int n = g.vertex_count();
    std::vector<char> member(n + 1, 0);
    std::vector<int> set(s);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int v : set) {
        g.require_vertex(v);
        member[v] = 1;
    }
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            every_simple_path(g, set[i], set[j], [&](const std::vector<int>& path) {
                if (!qualifies(g, rb, path)) return;
                for (int z : path) member[z] = 1;
            });
    std::vector<int> out;
    for (int z = 1; z <= n; ++z)
        if (member[z]) out.push_back(z);
    return out;
}

std::vector<std::vector<int>> enumerate_convex_sets(const Graph& g, const ResolvedBounds& rb,
                                                    int vertex_cap) {
    require_oracle_size(g, vertex_cap, "enumerate_convex_sets");
    const int n = g.vertex_count();

    std::vector<std::uint64_t> pair_masks(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const auto m = pair_union_mask(g, rb, u, v);
            pair_masks[static_cast<std::size_t>(u) * (n + 1) + v] = m;
            pair_masks[static_cast<std::size_t>(v) * (n + 1) + u] = m;
        }

    std::vector<std::vector<int>> family;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t set = 0; set < limit; ++set) {
        bool convex = true;
        for (std::uint64_t rest = set; rest && convex;) {
            const int u = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            for (std::uint64_t rest2 = rest; rest2;) {
                const int v = std::countr_zero(rest2) + 1;
                rest2 &= rest2 - 1;
                if (pair_masks[static_cast<std::size_t>(u) * (n + 1) + v] & ~set) {
                    convex = false;
                    break;
                }
            }
        }
        if (!convex) continue;
        std::vector<int> out;
        for (std::uint64_t rest = set; rest;) {
            out.push_back(std::countr_zero(rest) + 1);
            rest &= rest - 1;
        }
        family.push_back(std::move(out));
    }
    std::sort(family.begin(), family.end());
    return family;
}

bool chordless_path_through(const Graph& h, int i, int j, int z, int vertex_cap) {
    require_oracle_size(h, vertex_cap, "chordless_path_through");
    h.require_vertex(i);
    h.require_vertex(j);
    h.require_vertex(z);
    if (i == j || i == z || j == z)
        fail(ErrorCode::InvalidArgument, "chordless_path_through requires three distinct vertices");

    bool found = false;
    every_simple_path(h, i, j, [&](const std::vector<int>& path) {
        if (found) return;
        if (std::find(path.begin(), path.end(), z) == path.end()) return;
        for (std::size_t s = 0; s < path.size(); ++s)
            for (std::size_t t = s + 2; t < path.size(); ++t)
                if (h.adjacent(path[s], path[t])) return;
        found = true;
    });
    return found;
}

GadgetInstance build_mcs_gadget(const Graph& h, int i, int j, int z) {
    h.require_vertex(i);
    h.require_vertex(j);
    h.require_vertex(z);
    if (i == j || i == z || j == z)
        fail(ErrorCode::InvalidArgument, "gadget construction requires three distinct vertices");

    const int n = h.vertex_count();
    const int chain_internal = n - 1;  // per subdivided edge
    const int big_n = n + h.degree(z) * chain_internal;

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : h.edges())
        if (u != z && v != z) edges.emplace_back(u, v);

    // Each edge (s, z) becomes an s..z chain with n-1 internal vertices,
    // labels handed out in ascending order of s, from the s side toward z.
    int next_label = n + 1;
    for (int s : h.neighbors(z)) {
        int prev = s;
        for (int t = 0; t < chain_internal; ++t) {
            edges.emplace_back(prev, next_label);
            prev = next_label++;
        }
        edges.emplace_back(prev, z);
    }

    GadgetInstance gadget{Graph(big_n, edges), ConvexitySpec{}, {std::min(i, j), std::max(i, j)},
                          std::vector<int>(n + 1, 0), n};
    for (int w = 1; w <= n; ++w) gadget.h_to_g[w] = w;  // subdivision keeps base labels

    gadget.spec.mode = ConvexitySpec::Mode::Matrix;
    gadget.spec.matrices = {
        LengthMatrix::uniform(big_n, LengthEntry::finite(2 * n)),
        LengthMatrix::uniform(big_n, LengthEntry::finite(3 * n - 3)),
        LengthMatrix::uniform(big_n, LengthEntry::finite(1)),
        LengthMatrix::uniform(big_n, LengthEntry::finite(1)),
    };
    return gadget;
}

namespace {

// Seeded generator with library-independent draws so fixed seeds reproduce
// across standard libraries.
struct Rng {
    std::uint64_t state;

    explicit Rng(unsigned seed) : state(seed * 6364136223846793005ull + 1442695040888963407ull) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return (next() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
    }
};

}  // namespace

Graph random_connected_graph(int n, double p, unsigned seed) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "random graph needs n >= 1");
    if (n == 1) return Graph(1, {});

    Rng rng(seed);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v + 1;
    for (int v = n - 1; v > 0; --v) std::swap(order[v], order[rng.below(v + 1)]);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> present(n + 1, std::vector<char>(n + 1, 0));
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (present[u][v]) return;
        present[u][v] = 1;
        edges.emplace_back(u, v);
    };

    for (int t = 1; t < n; ++t) add(order[t], order[rng.below(t)]);  // random spanning tree
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!present[u][v] && rng.chance(p)) add(u, v);

    return Graph(n, edges);
}

}  // namespace pathconv::oracle
