#include "pathconv/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace pathconv {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "vertex count must be >= 1, got " + std::to_string(n));

    adj_.assign(n_ + 1, {});
    adj_flat_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);

    for (auto [u, v] : edge_list) {
        if (u < 1 || u > n_)
            fail(ErrorCode::VertexOutOfRange,
                 "edge " + edge_str(u, v) + ": vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n_));
        if (v < 1 || v > n_)
            fail(ErrorCode::VertexOutOfRange,
                 "edge " + edge_str(u, v) + ": vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
        if (u == v) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adjacent(u, v)) continue;  // drop parallel edges
        adj_flat_[static_cast<std::size_t>(u) * (n_ + 1) + v] = 1;
        adj_flat_[static_cast<std::size_t>(v) * (n_ + 1) + u] = 1;
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity via breadth-first search from vertex 1
    std::vector<char> seen(n_ + 1, 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n_) {
        int missing = 0;
        for (int v = 1; v <= n_; ++v)
            if (!seen[v]) { missing = v; break; }
        fail(ErrorCode::Disconnected,
             "graph is disconnected: vertex " + std::to_string(missing) + " is not reachable from vertex 1");
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

void Graph::require_vertex(int v) const {
    if (!valid_vertex(v))
        fail(ErrorCode::VertexOutOfRange,
             "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    if (!(in >> first)) fail(ErrorCode::ParseError, "empty graph input");

    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;

    if (first == "p" || first == "c") {
        // DIMACS-like format B
        std::istringstream lines(text);
        std::string line;
        bool have_header = false;
        int edges_seen = 0;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag == "c") continue;
            if (tag == "p") {
                if (have_header) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": duplicate p header");
                std::string kind;
                if (!(ls >> kind >> n >> m))
                    fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": malformed p header");
                have_header = true;
            } else if (tag == "e") {
                if (!have_header) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": e line before p header");
                int u = 0, v = 0;
                if (!(ls >> u >> v))
                    fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": malformed e line");
                edges.emplace_back(u, v);
                ++edges_seen;
            } else {
                fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
            }
        }
        if (!have_header) fail(ErrorCode::ParseError, "missing p header");
        if (edges_seen != m)
            fail(ErrorCode::ParseError,
                 "p header promises " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));
    } else {
        // format A: n m then m pairs
        std::istringstream all(text);
        if (!(all >> n >> m)) fail(ErrorCode::ParseError, "malformed header, expected 'n m'");
        for (int t = 0; t < m; ++t) {
            int u = 0, v = 0;
            if (!(all >> u >> v))
                fail(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, input ends after " + std::to_string(t));
            edges.emplace_back(u, v);
        }
        std::string extra;
        if (all >> extra) fail(ErrorCode::ParseError, "unexpected trailing token '" + extra + "'");
    }

    return Graph(n, edges);
}

Graph Graph::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

void validate_path(const Graph& g, const Path& p) {
    if (p.vertices.size() < 2)
        fail(ErrorCode::InvalidPath, "path needs at least two vertices");
    std::vector<char> seen(g.vertex_count() + 1, 0);
    for (int v : p.vertices) {
        g.require_vertex(v);
        if (seen[v]) fail(ErrorCode::InvalidPath, "vertex " + std::to_string(v) + " repeats in path");
        seen[v] = 1;
    }
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
        if (!g.adjacent(p.vertices[t], p.vertices[t + 1]))
            fail(ErrorCode::InvalidPath,
                 "consecutive vertices " + edge_str(p.vertices[t], p.vertices[t + 1]) + " are not adjacent");
    }
}

std::vector<Chord> path_chords(const Graph& g, const Path& p) {
    validate_path(g, p);
    std::vector<Chord> chords;
    const int len = static_cast<int>(p.vertices.size());
    for (int s = 0; s < len; ++s)
        for (int t = s + 2; t < len; ++t)
            if (g.adjacent(p.vertices[s], p.vertices[t]))
                chords.push_back({s + 1, t + 1});
    return chords;  // loop order is already (from_pos, length)
}

IntMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix dist(n, 0);
    std::vector<int> d(n + 1);
    std::deque<int> queue;
    for (int src = 1; src <= n; ++src) {
        std::fill(d.begin(), d.end(), -1);
        d[src] = 0;
        queue.assign(1, src);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v = 1; v <= n; ++v) dist(src, v) = d[v];
    }
    return dist;
}

namespace {

// Longest simple path from cur to target avoiding `visited`, as a memoized
// depth-first search over (vertex, visited-set) states. Returns -1 when the
// target is unreachable. Dense memo: n is capped at 20 so the table stays
// below ~100 MB even at the limit.
struct LongestPathSearch {
    const Graph& g;
    int target;
    std::vector<std::int8_t> memo;  // index: mask * n + (v-1); -2 unknown

    LongestPathSearch(const Graph& graph, int tgt)
        : g(graph), target(tgt),
          memo((static_cast<std::size_t>(1) << graph.vertex_count()) *
                   static_cast<std::size_t>(graph.vertex_count()),
               -2) {}

    int run(int cur, std::uint32_t mask) {
        if (cur == target) return 0;
        const std::size_t key =
            static_cast<std::size_t>(mask) * g.vertex_count() + (cur - 1);
        if (memo[key] != -2) return memo[key];
        int best = -1;
        for (int w : g.neighbors(cur)) {
            const std::uint32_t bit = 1u << (w - 1);
            if (mask & bit) continue;
            int sub = run(w, mask | bit);
            if (sub >= 0 && sub + 1 > best) best = sub + 1;
        }
        memo[key] = static_cast<std::int8_t>(best);
        return best;
    }
};

constexpr int kLongestPathHardLimit = 20;

}  // namespace

int longest_path_length(const Graph& g, int i, int j, int vertex_cap) {
    g.require_vertex(i);
    g.require_vertex(j);
    if (i == j) fail(ErrorCode::InvalidArgument, "longest_path_length requires distinct endpoints");
    const int n = g.vertex_count();
    const int cap = std::min(vertex_cap, kLongestPathHardLimit);
    if (n > cap)
        fail(ErrorCode::SizeLimitExceeded,
             "longest-path search supports at most " + std::to_string(cap) +
                 " vertices, graph has " + std::to_string(n));
    LongestPathSearch search(g, j);
    int best = search.run(i, 1u << (i - 1));
    // connectivity guarantees some ij-path exists
    return best;
}

std::uint64_t graph_digest(const Graph& g) {
    const std::string text = g.to_edge_list_text();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace pathconv
