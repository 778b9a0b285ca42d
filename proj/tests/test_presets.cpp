// Every preset must induce exactly the path family its convexity is defined
// by. Each reference predicate below is written from the family's plain
// description (shortest / induced / length-window / chord-window wording),
// not from the (a,b,c,d) tuple, so a wrong preset table or a resolution bug
// cannot hide.

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pathconv/interval.hpp"
#include "pathconv/oracle.hpp"
#include "support.hpp"

using namespace pathconv;
using namespace testsupport;

namespace {

struct FamilyCase {
    std::string spec;
    // (g, dist, longest, path) -> belongs to the family?
    std::function<bool(const Graph&, const IntMatrix&, const IntMatrix&, const std::vector<int>&)>
        belongs;
};

int len_of(const std::vector<int>& p) { return static_cast<int>(p.size()) - 1; }

std::vector<int> chord_lengths(const Graph& g, const std::vector<int>& p) {
    std::vector<int> out;
    for (std::size_t s = 0; s < p.size(); ++s)
        for (std::size_t t = s + 2; t < p.size(); ++t)
            if (g.adjacent(p[s], p[t])) out.push_back(static_cast<int>(t - s));
    return out;
}

std::vector<FamilyCase> family_cases() {
    auto shortest = [](const Graph&, const IntMatrix& dist, const IntMatrix&,
                       const std::vector<int>& p) {
        return len_of(p) == dist(p.front(), p.back());
    };
    auto induced = [](const Graph& g, const IntMatrix&, const IntMatrix&,
                      const std::vector<int>& p) {
        return len_of(p) >= 2 && chord_lengths(g, p).empty();
    };
    return {
        {"preset:geodesic", shortest},
        {"preset:monophonic", induced},
        {"preset:g3",
         [](const Graph&, const IntMatrix& dist, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 3 && len_of(p) == dist(p.front(), p.back());
         }},
        {"preset:m3",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 3 && chord_lengths(g, p).empty();
         }},
        {"preset:gk:2",
         [](const Graph&, const IntMatrix& dist, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) == dist(p.front(), p.back()) && len_of(p) <= 2;
         }},
        {"preset:p3",
         [](const Graph&, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) == 2;
         }},
        {"preset:p3star",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) == 2 && !g.adjacent(p.front(), p.back());
         }},
        {"preset:triangle",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             if (len_of(p) < 2) return false;
             for (int lambda : chord_lengths(g, p))
                 if (lambda != 2) return false;
             return true;
         }},
        {"preset:total",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             if (len_of(p) < 2) return false;
             for (int lambda : chord_lengths(g, p))
                 if (lambda < 3) return false;
             return true;
         }},
        {"preset:detour",
         [](const Graph&, const IntMatrix&, const IntMatrix& longest, const std::vector<int>& p) {
             return len_of(p) == longest(p.front(), p.back());
         }},
        {"preset:allpath",
         [](const Graph&, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 2;
         }},
        {"preset:gk_new:3",
         [](const Graph&, const IntMatrix& dist, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 3 && len_of(p) == dist(p.front(), p.back());
         }},
        {"preset:mk:2",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 2 && chord_lengths(g, p).empty();
         }},
        {"preset:klpath:2,3",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) >= 2 && len_of(p) <= 3 && chord_lengths(g, p).empty();
         }},
        {"preset:kcycle:4",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             if (len_of(p) != 3) return false;
             for (int lambda : chord_lengths(g, p))
                 if (lambda != 3) return false;
             return true;
         }},
        {"preset:hamiltonian",
         [](const Graph& g, const IntMatrix&, const IntMatrix&, const std::vector<int>& p) {
             return len_of(p) == g.vertex_count() - 1;
         }},
    };
}

}  // namespace

TEST_CASE("every preset enumerates exactly its defining path family") {
    const auto cases = family_cases();
    for (unsigned seed = 0; seed < 14; ++seed) {
        const int n = 3 + static_cast<int>(seed) % 5;
        const auto g = oracle::random_connected_graph(n, seed % 2 ? 0.35 : 0.7, 2300 + seed);
        const auto dist = all_pairs_distances(g);
        IntMatrix longest(n, 0);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                longest(u, v) = longest_path_length(g, u, v);
                longest(v, u) = longest(u, v);
            }
        for (const auto& fc : cases) {
            CAPTURE(fc.spec);
            const auto rb = resolve_bounds(parse_spec(fc.spec), g);
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) {
                    auto expected = ref_simple_paths(g, u, v);
                    expected.erase(std::remove_if(expected.begin(), expected.end(),
                                                  [&](const auto& p) {
                                                      return !fc.belongs(g, dist, longest, p);
                                                  }),
                                   expected.end());
                    std::sort(expected.begin(), expected.end());
                    std::vector<std::vector<int>> engine_family;
                    for (const auto& p : enumerate_paths(g, rb, u, v))
                        engine_family.push_back(p.vertices);
                    CHECK(engine_family == expected);
                }
        }
    }
}

TEST_CASE("preset interval members agree with the oracle across the suite") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        const int n = 4 + static_cast<int>(seed) % 4;
        const auto g = oracle::random_connected_graph(n, 0.5, 2400 + seed);
        for (const auto& fc : family_cases()) {
            const auto rb = resolve_bounds(parse_spec(fc.spec), g);
            const std::vector<int> s{1, 2, std::min(4, n)};
            CHECK(interval(g, rb, s, {.want_witnesses = false}).members ==
                  oracle::oracle_interval(g, rb, s));
        }
    }
}
