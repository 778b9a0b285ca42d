#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathconv/error.hpp"
#include "pathconv/matrix.hpp"

namespace pathconv {

// A finite simple connected undirected graph with vertices labeled 1..n.
// Immutable after construction; all queries are read-only.
class Graph {
public:
    // Validates vertex range, rejects self-loops, deduplicates parallel
    // edges, and requires connectivity.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    // Parses either text format:
    //   A: "n m" header followed by m "u v" lines;
    //   B: DIMACS-like, "c" comments, "p edge n m" header, "e u v" lines.
    // Auto-detected by the first token.
    static Graph parse(const std::string& text);
    static Graph read_file(const std::string& path);

    // Serializes in format A (deterministic: edges sorted, u < v).
    std::string to_edge_list_text() const;

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    // Sorted, each pair with u < v.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const;

    bool adjacent(int u, int v) const {
        return adj_flat_[static_cast<std::size_t>(u) * (n_ + 1) + v] != 0;
    }

    int degree(int v) const;

    bool valid_vertex(int v) const noexcept { return v >= 1 && v <= n_; }
    void require_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;   // index 0 unused
    std::vector<std::uint8_t> adj_flat_;  // (n+1)^2 adjacency flags
};

// Simple path: distinct vertices, consecutive pairs adjacent, >= 1 edge.
struct Path {
    std::vector<int> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    int endpoint_u() const { return vertices.front(); }
    int endpoint_v() const { return vertices.back(); }

    friend bool operator==(const Path&, const Path&) = default;
};

// Chord of a path: an edge between positions p < q of the vertex sequence
// with q - p >= 2. Its length is the index distance q - p.
struct Chord {
    int from_pos = 0;  // 1-based position into the vertex sequence
    int to_pos = 0;

    int length() const noexcept { return to_pos - from_pos; }

    friend bool operator==(const Chord&, const Chord&) = default;
};

// Throws InvalidPath unless p satisfies the Path invariants in g.
void validate_path(const Graph& g, const Path& p);

// All chords of p in g, sorted by (from_pos, length).
std::vector<Chord> path_chords(const Graph& g, const Path& p);

// Breadth-first distances from every vertex; symmetric, zero diagonal.
IntMatrix all_pairs_distances(const Graph& g);

inline constexpr int kDefaultLongestPathCap = 14;

// Maximum number of edges over all simple ij-paths. Exhaustive search over
// (vertex, visited-set) states; refuses graphs larger than vertex_cap.
int longest_path_length(const Graph& g, int i, int j,
                        int vertex_cap = kDefaultLongestPathCap);

// FNV-1a over the canonical serialization (n plus sorted edge list).
std::uint64_t graph_digest(const Graph& g);

}  // namespace pathconv
