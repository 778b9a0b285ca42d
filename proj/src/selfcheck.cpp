#include "pathconv/selfcheck.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

#include "pathconv/hull.hpp"
#include "pathconv/interval.hpp"
#include "pathconv/oracle.hpp"
#include "pathconv/spec.hpp"

namespace pathconv {

namespace {

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
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }
};

std::vector<int> random_subset(Rng& rng, int n, int size) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v + 1;
    for (int v = n - 1; v > 0; --v) std::swap(all[v], all[rng.below(v + 1)]);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<std::string> suite_specs(Rng& rng) {
    std::vector<std::string> specs = {
        "preset:geodesic", "preset:monophonic", "preset:g3",     "preset:m3",
        "preset:gk:2",     "preset:p3",         "preset:p3star", "preset:triangle",
        "preset:total",    "preset:detour",     "preset:allpath",
    };
    for (int t = 0; t < 6; ++t) {
        const int a = rng.in(1, 4);
        const int b = rng.in(a, 8);
        const int c = rng.in(1, 3);
        const int d = rng.in(c, 8);
        specs.push_back("abcd:" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + "," + std::to_string(d));
    }
    return specs;
}

std::vector<Graph> named_small_graphs() {
    std::vector<Graph> out;
    out.emplace_back(3, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});                    // P3
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});            // P4
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}});    // C4
    out.emplace_back(5, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});  // C5
    out.emplace_back(3, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}});            // K3
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});  // K4
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}, {3, 4}});    // paw
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});  // diamond
    out.emplace_back(4, std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}});            // star
    return out;
}

struct Group {
    std::string name;
    int checks = 0;
    int failures = 0;

    void tally(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

// Reference forms written directly from the definitions, sharing nothing
// with the engine dispatch.
std::vector<int> geodesic_reference(const Graph& g, const IntMatrix& dist, const std::vector<int>& s) {
    std::vector<int> out;
    std::vector<char> in_s(g.vertex_count() + 1, 0);
    for (int v : s) in_s[v] = 1;
    for (int z = 1; z <= g.vertex_count(); ++z) {
        bool member = in_s[z];
        for (std::size_t i = 0; i < s.size() && !member; ++i)
            for (std::size_t j = i + 1; j < s.size() && !member; ++j)
                member = dist(s[i], z) + dist(z, s[j]) == dist(s[i], s[j]);
        if (member) out.push_back(z);
    }
    return out;
}

std::vector<int> two_step_reference(const Graph& g, const std::vector<int>& s, bool nonadjacent) {
    std::vector<int> out;
    std::vector<char> in_s(g.vertex_count() + 1, 0);
    for (int v : s) in_s[v] = 1;
    for (int z = 1; z <= g.vertex_count(); ++z) {
        bool member = in_s[z];
        if (!member) {
            std::vector<int> nbrs;
            for (int w : g.neighbors(z))
                if (in_s[w]) nbrs.push_back(w);
            for (std::size_t i = 0; i < nbrs.size() && !member; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && !member; ++j)
                    member = !nonadjacent || !g.adjacent(nbrs[i], nbrs[j]);
        }
        if (member) out.push_back(z);
    }
    return out;
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& opts) {
    Rng rng(opts.seed);
    const int max_n = std::max(3, opts.max_n);

    std::vector<Graph> graphs;
    const double densities[3] = {0.2, 0.5, 0.8};
    for (int n = 3; n <= max_n; ++n)
        for (int di = 0; di < 3; ++di)
            graphs.push_back(oracle::random_connected_graph(
                n, densities[di], opts.seed * 7919u + static_cast<unsigned>(n * 31 + di)));

    Group diff{"interval-oracle"}, closed{"closed-forms"}, axioms{"axioms"}, gadget{"gadget"};

    const auto specs = suite_specs(rng);
    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        for (const auto& spec_text : specs) {
            const auto spec = parse_spec(spec_text);
            const auto rb = resolve_bounds(spec, g);
            for (int t = 0; t < 2; ++t) {
                const auto s = random_subset(rng, n, rng.in(1, std::min(n, 4)));
                const auto fast = interval(g, rb, s, {.want_witnesses = false}).members;
                const auto generic =
                    interval(g, rb, s, {.force_generic = true, .want_witnesses = false}).members;
                const auto reference = oracle::oracle_interval(g, rb, s);
                diff.tally(fast == reference && generic == reference);
            }
            axioms.tally(convex_test(g, rb, {}).convex);
            {
                std::vector<int> all(n);
                for (int v = 0; v < n; ++v) all[v] = v + 1;
                axioms.tally(convex_test(g, rb, all).convex);
            }
            const auto c1 = hull(g, rb, random_subset(rng, n, rng.in(1, n))).hull();
            const auto c2 = hull(g, rb, random_subset(rng, n, rng.in(1, n))).hull();
            std::vector<int> meet;
            std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(meet));
            axioms.tally(convex_test(g, rb, meet).convex);
        }

        const auto dist = all_pairs_distances(g);
        const auto geo = resolve_bounds(parse_spec("preset:geodesic"), g);
        const auto p3 = resolve_bounds(parse_spec("preset:p3"), g);
        const auto p3s = resolve_bounds(parse_spec("preset:p3star"), g);
        for (int t = 0; t < 2; ++t) {
            const auto s = random_subset(rng, n, rng.in(1, std::min(n, 4)));
            closed.tally(interval(g, geo, s, {.want_witnesses = false}).members ==
                         geodesic_reference(g, dist, s));
            closed.tally(interval(g, p3, s, {.want_witnesses = false}).members ==
                         two_step_reference(g, s, false));
            closed.tally(interval(g, p3s, s, {.want_witnesses = false}).members ==
                         two_step_reference(g, s, true));
        }
    }

    // Gadget equivalence, with an in-memory serialization round-trip through
    // the graph text format and the JSON matrix format.
    std::vector<Graph> hosts = named_small_graphs();
    const int gadget_max = std::min(max_n, 6);
    for (int t = 0; t < 8; ++t)
        hosts.push_back(oracle::random_connected_graph(rng.in(3, gadget_max), densities[t % 3],
                                                       opts.seed * 104729u + static_cast<unsigned>(t)));
    int instance = 0;
    for (const auto& h : hosts) {
        const int n = h.vertex_count();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int z = 1; z <= n; ++z) {
                    if (i == j || i == z || j == z) continue;
                    auto inst = oracle::build_mcs_gadget(h, i, j, z);
                    const bool expected = oracle::chordless_path_through(h, i, j, z);
                    if (++instance % 10 == 0) {
                        inst.graph = Graph::parse(inst.graph.to_edge_list_text());
                        inst.spec = parse_matrix_spec_json(matrix_spec_to_json(inst.spec));
                    }
                    const auto rb = resolve_bounds(inst.spec, inst.graph);
                    const bool not_convex = !convex_test(inst.graph, rb, inst.s).convex;
                    gadget.tally(not_convex == expected);
                }
    }

    SelfcheckReport report;
    std::ostringstream out;
    for (const Group* group : {&diff, &closed, &axioms, &gadget}) {
        out << group->name << ": " << group->checks << " checks, " << group->failures
            << " failures\n";
        report.checks += group->checks;
        report.failures += group->failures;
    }
    out << "selfcheck: " << report.checks << " checks, " << report.failures << " failures\n";
    report.text = out.str();
    return report;
}

}  // namespace pathconv
