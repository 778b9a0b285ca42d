#include <doctest.h>

#include <algorithm>
#include <functional>

#include "pathconv/graph.hpp"
#include "pathconv/oracle.hpp"
#include "support.hpp"

using namespace pathconv;
using namespace testsupport;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("construction accepts the smallest graph and a path") {
    const Graph k1(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    const auto p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.adjacent(1, 2));
    CHECK_FALSE(p4.adjacent(1, 3));
    CHECK(p4.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("construction rejects bad inputs, naming the offender") {
    CHECK(code_of([] { Graph(4, {{1, 2}, {3, 4}}); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { Graph(3, {{1, 1}, {1, 2}, {2, 3}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { Graph(3, {{1, 5}, {1, 2}, {2, 3}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { Graph(0, {}); }) == ErrorCode::InvalidArgument);

    try {
        Graph(4, {{1, 2}, {3, 4}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("vertex 3") != std::string::npos);
    }
}

TEST_CASE("parallel edges are deduplicated") {
    const Graph g(3, {{1, 2}, {2, 1}, {2, 3}, {2, 3}});
    CHECK(g.edge_count() == 2);
}

TEST_CASE("distances: complete, path, cycle") {
    const auto k3 = complete_graph(3);
    const auto d3 = all_pairs_distances(k3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(d3(i, j) == (i == j ? 0 : 1));

    CHECK(all_pairs_distances(path_graph(4))(1, 4) == 3);

    // frozen from brute force over all simple 1-3 paths of C4: (1,2,3) and
    // (1,4,3), both of length 2
    const auto c4 = cycle_graph(4);
    int brute = 1 << 20;
    for (const auto& p : ref_simple_paths(c4, 1, 3))
        brute = std::min(brute, static_cast<int>(p.size()) - 1);
    CHECK(brute == 2);
    CHECK(all_pairs_distances(c4)(1, 3) == 2);
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_connected_graph(2 + seed % 8, 0.4, seed);
        const auto dist = all_pairs_distances(g);
        for (int i = 1; i <= g.vertex_count(); ++i) {
            CHECK(dist(i, i) == 0);
            for (int j = 1; j <= g.vertex_count(); ++j) CHECK(dist(i, j) == dist(j, i));
        }
    }
}

TEST_CASE("path validation") {
    const auto p4 = path_graph(4);
    CHECK_NOTHROW(validate_path(p4, Path{{1, 2, 3}}));
    CHECK(code_of([&] { validate_path(p4, Path{{1, 3}}); }) == ErrorCode::InvalidPath);
    CHECK(code_of([&] { validate_path(p4, Path{{1, 2, 1}}); }) == ErrorCode::InvalidPath);
    CHECK(code_of([&] { validate_path(p4, Path{{2}}); }) == ErrorCode::InvalidPath);
    CHECK(code_of([&] { validate_path(p4, Path{{1, 2, 5}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("chords of shortest paths are empty") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_connected_graph(3 + seed % 7, 0.5, 100 + seed);
        const auto dist = all_pairs_distances(g);
        // greedy breadth-first shortest path between the two most distant vertices
        int bu = 1, bv = 2, best = -1;
        for (int u = 1; u <= g.vertex_count(); ++u)
            for (int v = u + 1; v <= g.vertex_count(); ++v)
                if (dist(u, v) > best) {
                    best = dist(u, v);
                    bu = u;
                    bv = v;
                }
        Path p{{bu}};
        int cur = bu;
        while (cur != bv) {
            for (int w : g.neighbors(cur))
                if (dist(w, bv) == dist(cur, bv) - 1) {
                    p.vertices.push_back(w);
                    cur = w;
                    break;
                }
        }
        CHECK(path_chords(g, p).empty());
    }
}

TEST_CASE("chords: C4 plus chord, K4 hamiltonian path") {
    // derived by enumerating adjacent index pairs: the added edge {1,3} sits
    // at index distance 2 and the cycle-closing edge {4,1} at index distance 3
    const Graph c4_chord(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    const auto chords = path_chords(c4_chord, Path{{1, 2, 3, 4}});
    REQUIRE(chords.size() == 2);
    CHECK(chords[0] == Chord{1, 3});
    CHECK(chords[0].length() == 2);
    CHECK(chords[1] == Chord{1, 4});
    CHECK(chords[1].length() == 3);

    const auto k4 = complete_graph(4);
    const auto k4_chords = path_chords(k4, Path{{1, 2, 3, 4}});
    REQUIRE(k4_chords.size() == 3);
    CHECK(k4_chords[0] == Chord{1, 3});  // sorted by (from_pos, length)
    CHECK(k4_chords[1] == Chord{1, 4});
    CHECK(k4_chords[1].length() == 3);
    CHECK(k4_chords[2] == Chord{2, 4});
}

TEST_CASE("longest path: path, cycle, complete") {
    CHECK(longest_path_length(path_graph(4), 1, 4) == 3);

    // frozen from enumerating all simple 1-3 paths of C4
    const auto c4 = cycle_graph(4);
    int brute = -1;
    for (const auto& p : ref_simple_paths(c4, 1, 3))
        brute = std::max(brute, static_cast<int>(p.size()) - 1);
    CHECK(brute == 2);
    CHECK(longest_path_length(c4, 1, 3) == 2);

    // K4 has a hamiltonian 1-2 path
    CHECK(longest_path_length(complete_graph(4), 1, 2) == 3);

    CHECK(code_of([] { longest_path_length(path_graph(16), 1, 16); }) ==
          ErrorCode::SizeLimitExceeded);
    CHECK(longest_path_length(path_graph(16), 1, 16, 16) == 15);
}

TEST_CASE("longest path dominates distance, equals it on trees") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const int n = 3 + static_cast<int>(seed) % 6;
        const auto g = oracle::random_connected_graph(n, seed % 2 ? 0.5 : 0.0, 200 + seed);
        const auto dist = all_pairs_distances(g);
        const bool tree = g.edge_count() == n - 1;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                const int longest = longest_path_length(g, u, v);
                CHECK(longest >= dist(u, v));
                if (tree) CHECK(longest == dist(u, v));
            }
    }
}

TEST_CASE("text formats round-trip and auto-detect") {
    const auto g = Graph::parse("4 3\n1 2\n2 3\n3 4\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    const auto dimacs = Graph::parse("c a comment\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(dimacs.vertex_count() == 4);
    CHECK(dimacs.edge_count() == 4);

    const auto again = Graph::parse(dimacs.to_edge_list_text());
    CHECK(again.edges() == dimacs.edges());
    CHECK(graph_digest(again) == graph_digest(dimacs));

    CHECK(code_of([] { Graph::parse(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Graph::parse("4 3\n1 2\n2 3\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Graph::parse("p edge 4 1\ne 1 2\ne 2 3\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Graph::parse("4 2\n1 2\n2 3\n3 4\n"); }) == ErrorCode::ParseError);
}
