#include "pathconv/solvers.hpp"

#include <algorithm>
#include <bit>

namespace pathconv {

std::vector<int> mandatory_vertices(const Graph& g, const ResolvedBounds& rb) {
    const int n = g.vertex_count();
    std::vector<int> mandatory;
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int z = 1; z <= n; ++z) {
        rest.clear();
        for (int v = 1; v <= n; ++v)
            if (v != z) rest.push_back(v);
        const auto members = interval(g, rb, rest, {.want_witnesses = false}).members;
        if (!std::binary_search(members.begin(), members.end(), z)) mandatory.push_back(z);
    }
    return mandatory;
}

namespace {

using Mask = std::uint64_t;

// I({u,v}) for every pair, as vertex bitmasks (bit v-1 = vertex v). The
// interval of any set is the union of its pair intervals, which turns the
// subset searches below into a few dozen OR operations per candidate.
struct PairIntervals {
    int n;
    std::vector<Mask> table;  // (n+1)^2 entries, row-major by (u, v)

    PairIntervals(const Graph& g, const ResolvedBounds& rb)
        : n(g.vertex_count()), table(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                Mask m = 0;
                for (int z : interval(g, rb, {u, v}, {.want_witnesses = false}).members)
                    m |= Mask{1} << (z - 1);
                table[static_cast<std::size_t>(u) * (n + 1) + v] = m;
                table[static_cast<std::size_t>(v) * (n + 1) + u] = m;
            }
        }
    }

    Mask pair(int u, int v) const { return table[static_cast<std::size_t>(u) * (n + 1) + v]; }

    Mask interval_of(Mask set) const {
        Mask out = set;
        for (Mask rest = set; rest;) {
            const int u = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            for (Mask rest2 = rest; rest2;) {
                const int v = std::countr_zero(rest2) + 1;
                rest2 &= rest2 - 1;
                out |= pair(u, v);
            }
        }
        return out;
    }

    Mask hull_of(Mask set) const {
        Mask cur = set;
        for (;;) {
            const Mask next = interval_of(cur);
            if (next == cur) return cur;
            cur = next;
        }
    }
};

std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

void require_solver_size(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    const int cap = std::min(opts.size_cap, 62);
    if (n > cap)
        fail(ErrorCode::SizeLimitExceeded,
             "exact solver supports at most " + std::to_string(cap) + " vertices, graph has " +
                 std::to_string(n) + " (raise the cap to override)");
}

// Enumerates the size-k supersets of `seed` in lexicographic order of the
// full sorted vertex set, calling eval(mask) until it returns true. Returns
// true when a candidate was accepted, false when exhausted or out of budget.
template <typename Eval>
bool for_each_candidate(const std::vector<int>& free_vertices, Mask seed_mask, int k,
                        std::uint64_t max_candidates, std::uint64_t& explored, bool& capped,
                        Eval&& eval) {
    const int free_count = static_cast<int>(free_vertices.size());
    if (k < 0 || k > free_count) return false;
    std::vector<int> pick(k);
    for (int t = 0; t < k; ++t) pick[t] = t;
    for (;;) {
        if (max_candidates && explored >= max_candidates) {
            capped = true;
            return false;
        }
        ++explored;
        Mask mask = seed_mask;
        for (int t = 0; t < k; ++t) mask |= Mask{1} << (free_vertices[pick[t]] - 1);
        if (eval(mask)) return true;
        // next combination
        int t = k - 1;
        while (t >= 0 && pick[t] == free_count - k + t) --t;
        if (t < 0) return false;
        ++pick[t];
        for (int r = t + 1; r < k; ++r) pick[r] = pick[r - 1] + 1;
    }
}

SolverResult minimize_cover(const Graph& g, const ResolvedBounds& rb, const SolverOptions& opts,
                            bool use_hull) {
    require_solver_size(g, opts);
    const int n = g.vertex_count();
    const PairIntervals pairs(g, rb);
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

    Mask seed = 0;
    for (int z : mandatory_vertices(g, rb)) seed |= Mask{1} << (z - 1);
    std::vector<int> free_vertices;
    for (int v = 1; v <= n; ++v)
        if (!(seed & (Mask{1} << (v - 1)))) free_vertices.push_back(v);
    const int seed_size = n - static_cast<int>(free_vertices.size());

    SolverResult result;
    for (int k = std::max(1, seed_size); k <= n; ++k) {
        Mask found = 0;
        const bool hit = for_each_candidate(
            free_vertices, seed, k - seed_size, opts.max_candidates, result.explored, result.capped,
            [&](Mask mask) {
                const Mask closure = use_hull ? pairs.hull_of(mask) : pairs.interval_of(mask);
                if (closure != full) return false;
                found = mask;
                return true;
            });
        if (hit) {
            result.value = k;
            result.optimal_set = mask_to_set(found);
            return result;
        }
        if (result.capped) {
            result.note = "candidate budget exhausted; value not certified";
            return result;
        }
    }
    // unreachable: S = V always covers
    fail(ErrorCode::InvalidArgument, "cover search exhausted without finding V");
}

}  // namespace

SolverResult convexity_number(const Graph& g, const ResolvedBounds& rb, const SolverOptions& opts) {
    require_solver_size(g, opts);
    const int n = g.vertex_count();
    SolverResult result;
    if (n == 1) {
        result.value = 0;
        result.note = "c(G) is undefined on a single-vertex graph; 0 by convention (the empty set)";
        return result;
    }
    const PairIntervals pairs(g, rb);
    std::vector<int> all_vertices(n);
    for (int v = 1; v <= n; ++v) all_vertices[v - 1] = v;

    for (int k = n - 1; k >= 0; --k) {
        Mask found = 0;
        const bool hit = for_each_candidate(
            all_vertices, 0, k, opts.max_candidates, result.explored, result.capped,
            [&](Mask mask) {
                if (pairs.interval_of(mask) != mask) return false;
                found = mask;
                return true;
            });
        if (hit) {
            result.value = k;
            result.optimal_set = mask_to_set(found);
            return result;
        }
        if (result.capped) {
            result.note = "candidate budget exhausted; value not certified";
            return result;
        }
    }
    result.value = 0;  // the empty set is always convex
    return result;
}

SolverResult interval_number(const Graph& g, const ResolvedBounds& rb, const SolverOptions& opts) {
    return minimize_cover(g, rb, opts, false);
}

SolverResult hull_number(const Graph& g, const ResolvedBounds& rb, const SolverOptions& opts) {
    return minimize_cover(g, rb, opts, true);
}

}  // namespace pathconv
