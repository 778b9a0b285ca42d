#include "pathconv.h"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "pathconv/hull.hpp"
#include "pathconv/interval.hpp"
#include "pathconv/oracle.hpp"
#include "pathconv/selfcheck.hpp"
#include "pathconv/solvers.hpp"
#include "pathconv/spec.hpp"

namespace {

thread_local std::string g_last_error;

pathconv_status status_of(pathconv::ErrorCode code) {
    using pathconv::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument:     return PATHCONV_E_INVALID_ARGUMENT;
        case ErrorCode::SelfLoop:            return PATHCONV_E_SELF_LOOP;
        case ErrorCode::VertexOutOfRange:    return PATHCONV_E_VERTEX_OUT_OF_RANGE;
        case ErrorCode::Disconnected:        return PATHCONV_E_DISCONNECTED;
        case ErrorCode::ParseError:          return PATHCONV_E_PARSE;
        case ErrorCode::UnknownPreset:       return PATHCONV_E_UNKNOWN_PRESET;
        case ErrorCode::MalformedToken:      return PATHCONV_E_MALFORMED_TOKEN;
        case ErrorCode::MissingParameter:    return PATHCONV_E_MISSING_PARAMETER;
        case ErrorCode::MatrixShapeMismatch: return PATHCONV_E_MATRIX_SHAPE;
        case ErrorCode::AsymmetricMatrix:    return PATHCONV_E_ASYMMETRIC_MATRIX;
        case ErrorCode::NonzeroDiagonal:     return PATHCONV_E_NONZERO_DIAGONAL;
        case ErrorCode::NegativeEntry:       return PATHCONV_E_NEGATIVE_ENTRY;
        case ErrorCode::InvalidPath:         return PATHCONV_E_INVALID_PATH;
        case ErrorCode::SizeLimitExceeded:   return PATHCONV_E_SIZE_LIMIT;
        case ErrorCode::IoError:             return PATHCONV_E_IO;
    }
    return PATHCONV_E_INTERNAL;
}

template <typename Fn>
pathconv_status guarded(Fn&& fn) {
    try {
        fn();
        return PATHCONV_OK;
    } catch (const pathconv::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PATHCONV_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PATHCONV_E_INTERNAL;
    }
}

pathconv_status invalid(const char* message) {
    g_last_error = message;
    return PATHCONV_E_INVALID_ARGUMENT;
}

std::vector<int> to_set(const int* s, int s_len) {
    if (s_len > 0 && s == nullptr)
        pathconv::fail(pathconv::ErrorCode::InvalidArgument, "vertex set pointer is null");
    return std::vector<int>(s, s + (s_len > 0 ? s_len : 0));
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct pathconv_graph {
    pathconv::Graph graph;
    std::vector<int> flat_edges;

    explicit pathconv_graph(pathconv::Graph g) : graph(std::move(g)) {
        flat_edges.reserve(graph.edges().size() * 2);
        for (auto [u, v] : graph.edges()) {
            flat_edges.push_back(u);
            flat_edges.push_back(v);
        }
    }
};

struct pathconv_spec {
    pathconv::ConvexitySpec spec;
    std::string description;
};

struct pathconv_bounds {
    pathconv::ResolvedBounds bounds;
};

struct pathconv_interval_result {
    pathconv::IntervalResult result;
    std::vector<std::pair<int, const pathconv::PathWitness*>> witness_index;

    explicit pathconv_interval_result(pathconv::IntervalResult r) : result(std::move(r)) {
        for (const auto& [z, w] : result.witnesses) witness_index.emplace_back(z, &w);
    }
};

struct pathconv_hull_trace {
    pathconv::HullTrace trace;
};

struct pathconv_certificate {
    pathconv::ConvexityCertificate cert;
};

struct pathconv_solver_result {
    pathconv::SolverResult result;
};

extern "C" {

const char* pathconv_status_name(pathconv_status status) {
    switch (status) {
        case PATHCONV_OK:                      return "ok";
        case PATHCONV_E_INVALID_ARGUMENT:      return "invalid argument";
        case PATHCONV_E_SELF_LOOP:             return "self-loop";
        case PATHCONV_E_VERTEX_OUT_OF_RANGE:   return "vertex out of range";
        case PATHCONV_E_DISCONNECTED:          return "graph disconnected";
        case PATHCONV_E_PARSE:                 return "parse error";
        case PATHCONV_E_UNKNOWN_PRESET:        return "unknown preset";
        case PATHCONV_E_MALFORMED_TOKEN:       return "malformed token";
        case PATHCONV_E_MISSING_PARAMETER:     return "missing parameter";
        case PATHCONV_E_MATRIX_SHAPE:          return "matrix shape mismatch";
        case PATHCONV_E_ASYMMETRIC_MATRIX:     return "asymmetric matrix";
        case PATHCONV_E_NONZERO_DIAGONAL:      return "nonzero diagonal";
        case PATHCONV_E_NEGATIVE_ENTRY:        return "negative entry";
        case PATHCONV_E_INVALID_PATH:          return "invalid path";
        case PATHCONV_E_SIZE_LIMIT:            return "size limit exceeded";
        case PATHCONV_E_IO:                    return "i/o error";
        case PATHCONV_E_INTERNAL:              return "internal error";
    }
    return "unknown";
}

const char* pathconv_last_error(void) { return g_last_error.c_str(); }

const char* pathconv_version(void) { return "0.1.0"; }

void pathconv_string_free(char* s) { delete[] s; }

/* ---- graphs ---- */

pathconv_status pathconv_graph_build(int n, const int* edges, int m, pathconv_graph** out) {
    if (!out) return invalid("out pointer is null");
    if (m > 0 && !edges) return invalid("edges pointer is null");
    return guarded([&] {
        std::vector<std::pair<int, int>> list;
        list.reserve(m > 0 ? m : 0);
        for (int t = 0; t < m; ++t) list.emplace_back(edges[2 * t], edges[2 * t + 1]);
        *out = new pathconv_graph(pathconv::Graph(n, list));
    });
}

pathconv_status pathconv_graph_parse(const char* text, pathconv_graph** out) {
    if (!out || !text) return invalid("null argument");
    return guarded([&] { *out = new pathconv_graph(pathconv::Graph::parse(text)); });
}

pathconv_status pathconv_graph_read(const char* path, pathconv_graph** out) {
    if (!out || !path) return invalid("null argument");
    return guarded([&] { *out = new pathconv_graph(pathconv::Graph::read_file(path)); });
}

pathconv_status pathconv_graph_write(const pathconv_graph* g, const char* path) {
    if (!g || !path) return invalid("null argument");
    return guarded([&] {
        std::ofstream out(path);
        if (!out) pathconv::fail(pathconv::ErrorCode::IoError,
                                 std::string("cannot write graph file '") + path + "'");
        out << g->graph.to_edge_list_text();
    });
}

void pathconv_graph_free(pathconv_graph* g) { delete g; }

int pathconv_graph_n(const pathconv_graph* g) { return g ? g->graph.vertex_count() : 0; }
int pathconv_graph_m(const pathconv_graph* g) { return g ? g->graph.edge_count() : 0; }
const int* pathconv_graph_edges(const pathconv_graph* g) {
    return g ? g->flat_edges.data() : nullptr;
}
unsigned long long pathconv_graph_digest(const pathconv_graph* g) {
    return g ? pathconv::graph_digest(g->graph) : 0;
}

int pathconv_graph_distance(const pathconv_graph* g, int u, int v) {
    if (!g || !g->graph.valid_vertex(u) || !g->graph.valid_vertex(v)) return -1;
    // breadth-first on demand; graphs are small and the CLI caches bounds
    const auto dist = pathconv::all_pairs_distances(g->graph);
    return dist(u, v);
}

pathconv_status pathconv_random_connected_graph(int n, double p, unsigned seed,
                                                pathconv_graph** out) {
    if (!out) return invalid("out pointer is null");
    return guarded(
        [&] { *out = new pathconv_graph(pathconv::oracle::random_connected_graph(n, p, seed)); });
}

/* ---- specs ---- */

pathconv_status pathconv_spec_parse(const char* text, pathconv_spec** out) {
    if (!out || !text) return invalid("null argument");
    return guarded([&] {
        auto spec = pathconv::parse_spec(text);
        *out = new pathconv_spec{std::move(spec), {}};
        (*out)->description = (*out)->spec.to_string();
    });
}

pathconv_status pathconv_spec_load_matrices(const char* path, pathconv_spec** out) {
    if (!out || !path) return invalid("null argument");
    return guarded([&] {
        auto spec = pathconv::load_matrix_spec(path);
        *out = new pathconv_spec{std::move(spec), {}};
        (*out)->description = (*out)->spec.to_string();
    });
}

pathconv_status pathconv_spec_save_matrices(const pathconv_spec* spec, const char* path) {
    if (!spec || !path) return invalid("null argument");
    return guarded([&] { pathconv::save_matrix_spec(spec->spec, path); });
}

pathconv_status pathconv_spec_matrices_json(const pathconv_spec* spec, char** out) {
    if (!spec || !out) return invalid("null argument");
    return guarded([&] { *out = dup_string(pathconv::matrix_spec_to_json(spec->spec)); });
}

int pathconv_spec_is_matrix_mode(const pathconv_spec* spec) {
    return spec && spec->spec.mode == pathconv::ConvexitySpec::Mode::Matrix ? 1 : 0;
}

const char* pathconv_spec_describe(const pathconv_spec* spec) {
    return spec ? spec->description.c_str() : "";
}

void pathconv_spec_free(pathconv_spec* spec) { delete spec; }

/* ---- bounds ---- */

pathconv_status pathconv_resolve_bounds(const pathconv_spec* spec, const pathconv_graph* g,
                                        int longest_path_cap, pathconv_bounds** out) {
    if (!spec || !g || !out) return invalid("null argument");
    return guarded([&] {
        pathconv::ResolveOptions opts;
        if (longest_path_cap > 0) opts.longest_path_cap = longest_path_cap;
        *out = new pathconv_bounds{pathconv::resolve_bounds(spec->spec, g->graph, opts)};
    });
}

void pathconv_bounds_free(pathconv_bounds* rb) { delete rb; }

pathconv_status pathconv_bounds_entry(const pathconv_bounds* rb, char which, int i, int j,
                                      int* out) {
    if (!rb || !out) return invalid("null argument");
    const int n = rb->bounds.n();
    if (i < 1 || i > n || j < 1 || j > n) {
        g_last_error = "matrix index out of range";
        return PATHCONV_E_VERTEX_OUT_OF_RANGE;
    }
    switch (which) {
        case 'a': *out = rb->bounds.a(i, j); return PATHCONV_OK;
        case 'b': *out = rb->bounds.b(i, j); return PATHCONV_OK;
        case 'c': *out = rb->bounds.c(i, j); return PATHCONV_OK;
        case 'd': *out = rb->bounds.d(i, j); return PATHCONV_OK;
        default:  return invalid("which must be one of 'a','b','c','d'");
    }
}

/* ---- interval ---- */

pathconv_status pathconv_interval(const pathconv_graph* g, const pathconv_bounds* rb,
                                  const int* s, int s_len, int force_generic,
                                  pathconv_interval_result** out) {
    if (!g || !rb || !out) return invalid("null argument");
    return guarded([&] {
        pathconv::IntervalOptions opts;
        opts.force_generic = force_generic != 0;
        *out = new pathconv_interval_result(
            pathconv::interval(g->graph, rb->bounds, to_set(s, s_len), opts));
    });
}

void pathconv_interval_result_free(pathconv_interval_result* r) { delete r; }

int pathconv_interval_member_count(const pathconv_interval_result* r) {
    return r ? static_cast<int>(r->result.members.size()) : 0;
}

const int* pathconv_interval_members(const pathconv_interval_result* r) {
    return r ? r->result.members.data() : nullptr;
}

int pathconv_interval_witness_count(const pathconv_interval_result* r) {
    return r ? static_cast<int>(r->witness_index.size()) : 0;
}

pathconv_status pathconv_interval_witness(const pathconv_interval_result* r, int index, int* z,
                                          int* u, int* v, const int** path, int* path_len) {
    if (!r) return invalid("null argument");
    if (index < 0 || index >= static_cast<int>(r->witness_index.size()))
        return invalid("witness index out of range");
    const auto& [vertex, witness] = r->witness_index[index];
    if (z) *z = vertex;
    if (u) *u = witness->u;
    if (v) *v = witness->v;
    if (path) *path = witness->path.vertices.data();
    if (path_len) *path_len = static_cast<int>(witness->path.vertices.size());
    return PATHCONV_OK;
}

pathconv_status pathconv_interval_contains(const pathconv_graph* g, const pathconv_bounds* rb,
                                           const int* s, int s_len, int z, int* out_member,
                                           int* witness_u, int* witness_v, int* path_buf,
                                           int path_cap, int* path_len) {
    if (!g || !rb || !out_member) return invalid("null argument");
    return guarded([&] {
        const auto m = pathconv::interval_contains(g->graph, rb->bounds, to_set(s, s_len), z);
        *out_member = m.member ? 1 : 0;
        int len = 0;
        if (m.witness) {
            const auto& path = m.witness->path.vertices;
            len = static_cast<int>(path.size());
            if (path_buf && path_cap >= len)
                std::memcpy(path_buf, path.data(), sizeof(int) * path.size());
            else if (path_buf)
                pathconv::fail(pathconv::ErrorCode::InvalidArgument,
                               "witness path buffer too small");
            if (witness_u) *witness_u = m.witness->u;
            if (witness_v) *witness_v = m.witness->v;
        }
        if (path_len) *path_len = len;
    });
}

/* ---- convexity test / hull ---- */

pathconv_status pathconv_convex_test(const pathconv_graph* g, const pathconv_bounds* rb,
                                     const int* s, int s_len, int force_generic,
                                     pathconv_certificate** out) {
    if (!g || !rb || !out) return invalid("null argument");
    return guarded([&] {
        *out = new pathconv_certificate{
            pathconv::convex_test(g->graph, rb->bounds, to_set(s, s_len), force_generic != 0)};
    });
}

void pathconv_certificate_free(pathconv_certificate* cert) { delete cert; }

int pathconv_certificate_is_convex(const pathconv_certificate* cert) {
    return cert && cert->cert.convex ? 1 : 0;
}

int pathconv_certificate_augmenting_count(const pathconv_certificate* cert) {
    return cert ? static_cast<int>(cert->cert.augmenting.size()) : 0;
}

const int* pathconv_certificate_augmenting(const pathconv_certificate* cert) {
    return cert ? cert->cert.augmenting.data() : nullptr;
}

pathconv_status pathconv_certificate_witness(const pathconv_certificate* cert, int* z, int* u,
                                             int* v, const int** path, int* path_len) {
    if (!cert) return invalid("null argument");
    if (!cert->cert.witness) return invalid("certificate is convex, no witness");
    const auto& w = *cert->cert.witness;
    if (z) *z = cert->cert.witness_z;
    if (u) *u = w.u;
    if (v) *v = w.v;
    if (path) *path = w.path.vertices.data();
    if (path_len) *path_len = static_cast<int>(w.path.vertices.size());
    return PATHCONV_OK;
}

pathconv_status pathconv_hull(const pathconv_graph* g, const pathconv_bounds* rb, const int* s,
                              int s_len, int force_generic, pathconv_hull_trace** out) {
    if (!g || !rb || !out) return invalid("null argument");
    return guarded([&] {
        *out = new pathconv_hull_trace{
            pathconv::hull(g->graph, rb->bounds, to_set(s, s_len), force_generic != 0)};
    });
}

void pathconv_hull_trace_free(pathconv_hull_trace* trace) { delete trace; }

int pathconv_hull_stage_count(const pathconv_hull_trace* trace) {
    return trace ? static_cast<int>(trace->trace.stages.size()) : 0;
}

int pathconv_hull_stage_size(const pathconv_hull_trace* trace, int stage) {
    if (!trace || stage < 0 || stage >= static_cast<int>(trace->trace.stages.size())) return -1;
    return static_cast<int>(trace->trace.stages[stage].size());
}

const int* pathconv_hull_stage(const pathconv_hull_trace* trace, int stage) {
    if (!trace || stage < 0 || stage >= static_cast<int>(trace->trace.stages.size()))
        return nullptr;
    return trace->trace.stages[stage].data();
}

pathconv_status pathconv_hull_contains(const pathconv_graph* g, const pathconv_bounds* rb,
                                       const int* s, int s_len, int z, int* out_member) {
    if (!g || !rb || !out_member) return invalid("null argument");
    return guarded([&] {
        *out_member = pathconv::hull_contains(g->graph, rb->bounds, to_set(s, s_len), z) ? 1 : 0;
    });
}

/* ---- solvers ---- */

typedef pathconv::SolverResult (*solver_fn)(const pathconv::Graph&,
                                            const pathconv::ResolvedBounds&,
                                            const pathconv::SolverOptions&);

static pathconv_status run_solver(const pathconv_graph* g, const pathconv_bounds* rb,
                                  int size_cap, pathconv_solver_result** out, solver_fn solver) {
    if (!g || !rb || !out) return invalid("null argument");
    return guarded([&] {
        pathconv::SolverOptions opts;
        if (size_cap > 0) opts.size_cap = size_cap;
        *out = new pathconv_solver_result{solver(g->graph, rb->bounds, opts)};
    });
}

pathconv_status pathconv_convexity_number(const pathconv_graph* g, const pathconv_bounds* rb,
                                          int size_cap, pathconv_solver_result** out) {
    return run_solver(g, rb, size_cap, out, &pathconv::convexity_number);
}

pathconv_status pathconv_interval_number(const pathconv_graph* g, const pathconv_bounds* rb,
                                         int size_cap, pathconv_solver_result** out) {
    return run_solver(g, rb, size_cap, out, &pathconv::interval_number);
}

pathconv_status pathconv_hull_number(const pathconv_graph* g, const pathconv_bounds* rb,
                                     int size_cap, pathconv_solver_result** out) {
    return run_solver(g, rb, size_cap, out, &pathconv::hull_number);
}

void pathconv_solver_result_free(pathconv_solver_result* r) { delete r; }

int pathconv_solver_value(const pathconv_solver_result* r) { return r ? r->result.value : -1; }

int pathconv_solver_set_size(const pathconv_solver_result* r) {
    return r ? static_cast<int>(r->result.optimal_set.size()) : 0;
}

const int* pathconv_solver_set(const pathconv_solver_result* r) {
    return r ? r->result.optimal_set.data() : nullptr;
}

unsigned long long pathconv_solver_explored(const pathconv_solver_result* r) {
    return r ? r->result.explored : 0;
}

int pathconv_solver_capped(const pathconv_solver_result* r) {
    return r && r->result.capped ? 1 : 0;
}

const char* pathconv_solver_note(const pathconv_solver_result* r) {
    return r ? r->result.note.c_str() : "";
}

pathconv_status pathconv_mandatory_vertices(const pathconv_graph* g, const pathconv_bounds* rb,
                                            int* buf, int buf_cap, int* out_len) {
    if (!g || !rb || !out_len) return invalid("null argument");
    return guarded([&] {
        const auto mandatory = pathconv::mandatory_vertices(g->graph, rb->bounds);
        *out_len = static_cast<int>(mandatory.size());
        if (!mandatory.empty()) {
            if (!buf || buf_cap < static_cast<int>(mandatory.size()))
                pathconv::fail(pathconv::ErrorCode::InvalidArgument,
                               "mandatory vertex buffer too small");
            std::memcpy(buf, mandatory.data(), sizeof(int) * mandatory.size());
        }
    });
}

/* ---- selfcheck ---- */

pathconv_status pathconv_selfcheck(unsigned seed, int cap, char** report_out, int* checks_out,
                                   int* failures_out) {
    return guarded([&] {
        pathconv::SelfcheckOptions opts;
        opts.seed = seed;
        if (cap > 0) opts.max_n = cap;
        const auto report = pathconv::run_selfcheck(opts);
        if (report_out) *report_out = dup_string(report.text);
        if (checks_out) *checks_out = report.checks;
        if (failures_out) *failures_out = report.failures;
    });
}

}  // extern "C"
