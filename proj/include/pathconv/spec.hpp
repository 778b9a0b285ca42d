#pragma once

#include <string>
#include <vector>

#include "pathconv/graph.hpp"
#include "pathconv/matrix.hpp"

namespace pathconv {

// One bound position of a symbolic convexity tuple.
enum class SymbolKind {
    Constant,    // k >= 1
    Shortest,    // sigma: length of the shortest ij-path
    Longest,     // ell: length of the longest ij-path
    Unbounded,   // inf: no length restriction
    NMinusOne,   // nminus: one less than the number of vertices
    MinShortest  // min:k, minimum of k and the shortest ij-path length
};

struct BoundSymbol {
    SymbolKind kind = SymbolKind::Constant;
    int k = 1;  // payload for Constant and MinShortest

    static BoundSymbol constant(int k);
    static BoundSymbol sigma() { return {SymbolKind::Shortest, 0}; }
    static BoundSymbol ell() { return {SymbolKind::Longest, 0}; }
    static BoundSymbol inf() { return {SymbolKind::Unbounded, 0}; }
    static BoundSymbol nminus() { return {SymbolKind::NMinusOne, 0}; }
    static BoundSymbol min_shortest(int k);

    std::string to_string() const;

    friend bool operator==(const BoundSymbol&, const BoundSymbol&) = default;
};

// A length-matrix entry: a natural number, or unbounded. The -1 sentinel for
// "unbounded" exists only in serialized files.
struct LengthEntry {
    int value = 0;
    bool infinite = false;

    static LengthEntry finite(int v) { return {v, false}; }
    static LengthEntry unbounded() { return {0, true}; }

    friend bool operator==(const LengthEntry&, const LengthEntry&) = default;
};

// Symmetric n x n matrix of LengthEntry with zero diagonal. The constructor
// and setters maintain both invariants.
class LengthMatrix {
public:
    LengthMatrix() = default;
    explicit LengthMatrix(int n)
        : n_(n), entries_(static_cast<std::size_t>(n) * n, LengthEntry::finite(0)) {}

    static LengthMatrix uniform(int n, LengthEntry off_diagonal);

    // rows uses the serialized convention: -1 means unbounded. `name` labels
    // error messages ("A".."D").
    static LengthMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                                  const std::string& name);

    int size() const noexcept { return n_; }
    LengthEntry get(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, LengthEntry e);  // mirrors to (j, i)

    friend bool operator==(const LengthMatrix&, const LengthMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_ = 0;
    std::vector<LengthEntry> entries_;
};

// A convexity specification: either one symbolic (a,b,c,d) tuple applied to
// every vertex pair, or four explicit per-pair length matrices.
struct ConvexitySpec {
    enum class Mode { Symbolic, Matrix };

    Mode mode = Mode::Symbolic;
    BoundSymbol a, b, c, d;               // Symbolic mode
    std::vector<LengthMatrix> matrices;   // Matrix mode: exactly {A, B, C, D}
    std::string preset;                   // provenance tag, may be empty

    std::string to_string() const;
};

// Accepts "preset:<name>" or "abcd:<a>,<b>,<c>,<d>".
// Preset names: geodesic, monophonic, g3, m3, gk:<k>, p3, p3star, triangle,
// total, detour, allpath, gk_new:<k>, mk:<k>, klpath:<k>,<l>, kcycle:<k>,
// hamiltonian. abcd tokens: a positive integer, sigma, ell, inf, nminus, or
// min:<k>.
ConvexitySpec parse_spec(const std::string& text);

// JSON matrix file: {"n": n, "A": rows, "B": rows, "C": rows, "D": rows},
// each matrix n rows of n integers, -1 meaning unbounded.
ConvexitySpec parse_matrix_spec_json(const std::string& json_text);
ConvexitySpec load_matrix_spec(const std::string& path);
std::string matrix_spec_to_json(const ConvexitySpec& spec);
void save_matrix_spec(const ConvexitySpec& spec, const std::string& path);

// Fast-path classification of resolved bounds, detected once at resolution.
enum class BoundShape {
    GeodesicLike,        // a == b == dist for every pair
    TwoStepAnyPair,      // a == b == 2, chords of length two allowed
    TwoStepNonadjacent,  // a == b == 2, chordless required
    Generic
};

struct BoundsRow {
    int a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

// Per-pair concrete bounds after evaluating a spec against a graph.
// Unbounded entries are materialized as n-1 (a simple path has at most n-1
// edges and a chord index distance at most n-1).
struct ResolvedBounds {
    IntMatrix a, b, c, d;
    IntMatrix dist;  // cached breadth-first distances
    BoundShape shape = BoundShape::Generic;

    int n() const noexcept { return a.size(); }
    BoundsRow row(int i, int j) const { return {a(i, j), b(i, j), c(i, j), d(i, j)}; }

    friend bool operator==(const ResolvedBounds&, const ResolvedBounds&) = default;
};

struct ResolveOptions {
    int longest_path_cap = kDefaultLongestPathCap;
};

ResolvedBounds resolve_bounds(const ConvexitySpec& spec, const Graph& g,
                              const ResolveOptions& opts = {});

}  // namespace pathconv
