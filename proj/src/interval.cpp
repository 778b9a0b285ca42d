#include "pathconv/interval.hpp"

#include <algorithm>

namespace pathconv {

std::vector<int> canonical_vertex_set(const Graph& g, const std::vector<int>& s) {
    std::vector<int> out(s);
    for (int v : out) g.require_vertex(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool path_satisfies(const Graph& g, const ResolvedBounds& rb, const Path& p) {
    validate_path(g, p);
    const auto row = rb.row(p.endpoint_u(), p.endpoint_v());
    if (p.length() < row.a || p.length() > row.b) return false;
    const int len = static_cast<int>(p.vertices.size());
    for (int s = 0; s < len; ++s) {
        for (int t = s + 2; t < len; ++t) {
            if (!g.adjacent(p.vertices[s], p.vertices[t])) continue;
            const int lambda = t - s;
            if (lambda < row.c || lambda > row.d) return false;
        }
    }
    return true;
}

namespace {

// Shared depth-first enumeration core. Visits qualifying uv-paths in
// lexicographic order; when force_z > 0, only paths containing force_z are
// produced and branches that cannot still visit it are pruned.
struct PathSearch {
    const Graph& g;
    const ResolvedBounds& rb;
    int u, v;
    BoundsRow row;
    int force_z = 0;
    const std::function<bool(const Path&)>* visit = nullptr;

    std::vector<int> stack;
    std::vector<char> on_path;
    bool stopped = false;

    PathSearch(const Graph& graph, const ResolvedBounds& bounds, int from, int to)
        : g(graph), rb(bounds), u(from), v(to), row(bounds.row(from, to)),
          on_path(graph.vertex_count() + 1, 0) {}

    // Chords are final once both endpoints are placed, so each extension only
    // needs to check the chords it creates.
    bool extension_ok(int w) const {
        const int t = static_cast<int>(stack.size());  // w lands at index t (0-based)
        for (int s = 0; s + 2 <= t; ++s) {
            if (!g.adjacent(stack[s], w)) continue;
            const int lambda = t - s;
            if (lambda < row.c || lambda > row.d) return false;
        }
        return true;
    }

    void run() {
        if (row.a > row.b || row.b < 1) return;
        if (force_z && rb.dist(u, force_z) + rb.dist(force_z, v) > row.b) return;
        stack.push_back(u);
        on_path[u] = 1;
        descend();
        on_path[u] = 0;
        stack.pop_back();
    }

    void descend() {
        if (stopped) return;
        const int cur = stack.back();
        const int len = static_cast<int>(stack.size()) - 1;  // edges so far
        for (int w : g.neighbors(cur)) {
            if (stopped) return;
            if (on_path[w]) continue;
            if (len + 1 + rb.dist(w, v) > row.b) continue;
            if (force_z && !on_path[force_z] && w != force_z &&
                len + 1 + rb.dist(w, force_z) + rb.dist(force_z, v) > row.b)
                continue;
            if (!extension_ok(w)) continue;
            if (w == v) {
                if (len + 1 >= row.a && (!force_z || on_path[force_z])) {
                    stack.push_back(v);
                    Path p{stack};
                    stack.pop_back();
                    if (!(*visit)(p)) stopped = true;
                }
                continue;  // a simple path cannot extend past its endpoint
            }
            stack.push_back(w);
            on_path[w] = 1;
            descend();
            on_path[w] = 0;
            stack.pop_back();
        }
    }
};

}  // namespace

void enumerate_paths(const Graph& g, const ResolvedBounds& rb, int u, int v,
                     const std::function<bool(const Path&)>& visit) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) fail(ErrorCode::InvalidArgument, "path enumeration requires distinct endpoints");
    PathSearch search(g, rb, u, v);
    search.visit = &visit;
    search.run();
}

std::vector<Path> enumerate_paths(const Graph& g, const ResolvedBounds& rb, int u, int v) {
    std::vector<Path> out;
    enumerate_paths(g, rb, u, v, [&](const Path& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void offer_witness(std::map<int, PathWitness>& witnesses, int z, int u, int v,
                   const Path& path, const BoundsRow& row) {
    auto it = witnesses.find(z);
    if (it == witnesses.end() || lex_less(path.vertices, it->second.path.vertices))
        witnesses[z] = PathWitness{u, v, path, row};
}

// Lexicographically least shortest uv-path through z (positions on a
// shortest path determine remaining distance, so a greedy smallest-neighbor
// walk is safe).
Path geodesic_witness_path(const Graph& g, const IntMatrix& dist, int u, int v, int z) {
    const int total = dist(u, v);
    Path p{{u}};
    int cur = u;
    bool hit = (u == z);
    int step = 0;
    while (cur != v) {
        int next = 0;
        for (int w : g.neighbors(cur)) {
            const bool feasible =
                hit ? (step + 1 + dist(w, v) == total)
                    : (step + 1 + dist(w, z) + dist(z, v) == total);
            if (feasible) {
                next = w;
                break;
            }
        }
        if (next == 0)
            fail(ErrorCode::InvalidArgument, "geodesic witness construction lost its corridor");
        p.vertices.push_back(next);
        cur = next;
        if (next == z) hit = true;
        ++step;
    }
    return p;
}

IntervalResult interval_fast_geodesic(const Graph& g, const ResolvedBounds& rb,
                                      const std::vector<int>& s, bool want_witnesses) {
    const int n = g.vertex_count();
    std::vector<char> in_s(n + 1, 0);
    for (int v : s) in_s[v] = 1;

    IntervalResult result;
    for (int z = 1; z <= n; ++z) {
        if (in_s[z]) {
            result.members.push_back(z);
            continue;
        }
        bool member = false;
        for (std::size_t i = 0; i < s.size() && !member; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (rb.dist(s[i], z) + rb.dist(z, s[j]) == rb.dist(s[i], s[j])) {
                    member = true;
                    break;
                }
        if (!member) continue;
        result.members.push_back(z);
        if (!want_witnesses) continue;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const int u = s[i], v = s[j];
                if (rb.dist(u, z) + rb.dist(z, v) != rb.dist(u, v)) continue;
                offer_witness(result.witnesses, z, u, v,
                              geodesic_witness_path(g, rb.dist, u, v, z), rb.row(u, v));
            }
    }
    return result;
}

IntervalResult interval_fast_two_step(const Graph& g, const ResolvedBounds& rb,
                                      const std::vector<int>& s, bool want_witnesses,
                                      bool require_nonadjacent) {
    const int n = g.vertex_count();
    std::vector<char> in_s(n + 1, 0);
    for (int v : s) in_s[v] = 1;

    IntervalResult result;
    for (int z = 1; z <= n; ++z) {
        if (in_s[z]) {
            result.members.push_back(z);
            continue;
        }
        std::vector<int> s_neighbors;
        for (int w : g.neighbors(z))
            if (in_s[w]) s_neighbors.push_back(w);
        int best_u = 0, best_v = 0;
        for (std::size_t i = 0; i < s_neighbors.size() && !best_u; ++i)
            for (std::size_t j = i + 1; j < s_neighbors.size(); ++j) {
                if (require_nonadjacent && g.adjacent(s_neighbors[i], s_neighbors[j])) continue;
                best_u = s_neighbors[i];
                best_v = s_neighbors[j];
                break;
            }
        if (!best_u) continue;
        result.members.push_back(z);
        if (want_witnesses)
            result.witnesses[z] =
                PathWitness{best_u, best_v, Path{{best_u, z, best_v}}, rb.row(best_u, best_v)};
    }
    return result;
}

IntervalResult interval_generic(const Graph& g, const ResolvedBounds& rb,
                                const std::vector<int>& s, bool want_witnesses) {
    const int n = g.vertex_count();
    std::vector<char> member(n + 1, 0), in_s(n + 1, 0);
    for (int v : s) member[v] = in_s[v] = 1;
    int member_count = static_cast<int>(s.size());

    IntervalResult result;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!want_witnesses && member_count == n) break;
            const int u = s[i], v = s[j];
            const auto row = rb.row(u, v);
            enumerate_paths(g, rb, u, v, [&](const Path& p) {
                for (int z : p.vertices) {
                    if (in_s[z]) continue;
                    if (!member[z]) {
                        member[z] = 1;
                        ++member_count;
                    }
                    if (want_witnesses) offer_witness(result.witnesses, z, u, v, p, row);
                }
                return want_witnesses || member_count < n;
            });
        }
    }
    for (int z = 1; z <= n; ++z)
        if (member[z]) result.members.push_back(z);
    return result;
}

}  // namespace

IntervalResult interval(const Graph& g, const ResolvedBounds& rb,
                        const std::vector<int>& s, const IntervalOptions& opts) {
    const auto set = canonical_vertex_set(g, s);
    if (set.size() <= 1) {
        IntervalResult result;
        result.members = set;
        return result;
    }
    if (!opts.force_generic) {
        switch (rb.shape) {
            case BoundShape::GeodesicLike:
                return interval_fast_geodesic(g, rb, set, opts.want_witnesses);
            case BoundShape::TwoStepAnyPair:
                return interval_fast_two_step(g, rb, set, opts.want_witnesses, false);
            case BoundShape::TwoStepNonadjacent:
                return interval_fast_two_step(g, rb, set, opts.want_witnesses, true);
            case BoundShape::Generic:
                break;
        }
    }
    return interval_generic(g, rb, set, opts.want_witnesses);
}

Membership interval_contains(const Graph& g, const ResolvedBounds& rb,
                             const std::vector<int>& s, int z) {
    g.require_vertex(z);
    const auto set = canonical_vertex_set(g, s);
    if (std::binary_search(set.begin(), set.end(), z)) return {true, std::nullopt};

    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const int u = set[i], v = set[j];
            Membership found;
            const std::function<bool(const Path&)> take = [&](const Path& p) {
                found = {true, PathWitness{u, v, p, rb.row(u, v)}};
                return false;  // early exit on first success
            };
            PathSearch search(g, rb, u, v);
            search.force_z = z;
            search.visit = &take;
            search.run();
            if (found.member) return found;
        }
    }
    return {false, std::nullopt};
}

}  // namespace pathconv
