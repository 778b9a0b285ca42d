/* pathconv - path-convexity toolkit, C API.
 *
 * Opaque handles plus status codes. Every function that can fail returns a
 * pathconv_status; on failure, pathconv_last_error() gives a thread-local
 * detail message for the most recent failing call. Pointers returned by
 * accessors stay valid until their owning handle is freed.
 *
 * Vertices are 1-based everywhere. Vertex sets are plain int arrays.
 */

#ifndef PATHCONV_H
#define PATHCONV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PATHCONV_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PATHCONV_API __attribute__((visibility("default")))
#else
#define PATHCONV_API
#endif

typedef enum pathconv_status {
    PATHCONV_OK = 0,
    PATHCONV_E_INVALID_ARGUMENT = 1,
    PATHCONV_E_SELF_LOOP = 2,
    PATHCONV_E_VERTEX_OUT_OF_RANGE = 3,
    PATHCONV_E_DISCONNECTED = 4,
    PATHCONV_E_PARSE = 5,
    PATHCONV_E_UNKNOWN_PRESET = 6,
    PATHCONV_E_MALFORMED_TOKEN = 7,
    PATHCONV_E_MISSING_PARAMETER = 8,
    PATHCONV_E_MATRIX_SHAPE = 9,
    PATHCONV_E_ASYMMETRIC_MATRIX = 10,
    PATHCONV_E_NONZERO_DIAGONAL = 11,
    PATHCONV_E_NEGATIVE_ENTRY = 12,
    PATHCONV_E_INVALID_PATH = 13,
    PATHCONV_E_SIZE_LIMIT = 14,
    PATHCONV_E_IO = 15,
    PATHCONV_E_INTERNAL = 16
} pathconv_status;

PATHCONV_API const char* pathconv_status_name(pathconv_status status);
PATHCONV_API const char* pathconv_last_error(void);
PATHCONV_API const char* pathconv_version(void);
PATHCONV_API void pathconv_string_free(char* s);

typedef struct pathconv_graph pathconv_graph;
typedef struct pathconv_spec pathconv_spec;
typedef struct pathconv_bounds pathconv_bounds;
typedef struct pathconv_interval_result pathconv_interval_result;
typedef struct pathconv_hull_trace pathconv_hull_trace;
typedef struct pathconv_certificate pathconv_certificate;
typedef struct pathconv_solver_result pathconv_solver_result;

/* ---- graphs ------------------------------------------------------------ */

/* edges: 2*m ints (u1,v1,u2,v2,...). Simple connected graphs only. */
PATHCONV_API pathconv_status pathconv_graph_build(int n, const int* edges, int m,
                                                  pathconv_graph** out);
/* Text formats: "n m" + edge lines, or DIMACS-like "p edge n m" + "e u v". */
PATHCONV_API pathconv_status pathconv_graph_parse(const char* text, pathconv_graph** out);
PATHCONV_API pathconv_status pathconv_graph_read(const char* path, pathconv_graph** out);
PATHCONV_API pathconv_status pathconv_graph_write(const pathconv_graph* g, const char* path);
PATHCONV_API void pathconv_graph_free(pathconv_graph* g);

PATHCONV_API int pathconv_graph_n(const pathconv_graph* g);
PATHCONV_API int pathconv_graph_m(const pathconv_graph* g);
/* 2*m ints, sorted, u < v per pair. */
PATHCONV_API const int* pathconv_graph_edges(const pathconv_graph* g);
PATHCONV_API unsigned long long pathconv_graph_digest(const pathconv_graph* g);
PATHCONV_API int pathconv_graph_distance(const pathconv_graph* g, int u, int v);

PATHCONV_API pathconv_status pathconv_random_connected_graph(int n, double p, unsigned seed,
                                                             pathconv_graph** out);

/* ---- convexity specifications ------------------------------------------ */

/* "preset:<name>" or "abcd:<a>,<b>,<c>,<d>"; see pathconv_spec_describe. */
PATHCONV_API pathconv_status pathconv_spec_parse(const char* text, pathconv_spec** out);
/* JSON file {"n":..,"A":..,"B":..,"C":..,"D":..}; -1 encodes "no bound". */
PATHCONV_API pathconv_status pathconv_spec_load_matrices(const char* path, pathconv_spec** out);
PATHCONV_API pathconv_status pathconv_spec_save_matrices(const pathconv_spec* spec,
                                                         const char* path);
/* Matrix-mode specs serialize to a JSON string (owner: caller, free with
 * pathconv_string_free). */
PATHCONV_API pathconv_status pathconv_spec_matrices_json(const pathconv_spec* spec, char** out);
PATHCONV_API int pathconv_spec_is_matrix_mode(const pathconv_spec* spec);
PATHCONV_API const char* pathconv_spec_describe(const pathconv_spec* spec);
PATHCONV_API void pathconv_spec_free(pathconv_spec* spec);

/* ---- resolved bounds ---------------------------------------------------- */

/* longest_path_cap <= 0 selects the default (14). */
PATHCONV_API pathconv_status pathconv_resolve_bounds(const pathconv_spec* spec,
                                                     const pathconv_graph* g,
                                                     int longest_path_cap,
                                                     pathconv_bounds** out);
PATHCONV_API void pathconv_bounds_free(pathconv_bounds* rb);
/* which: 'a', 'b', 'c' or 'd'. */
PATHCONV_API pathconv_status pathconv_bounds_entry(const pathconv_bounds* rb, char which,
                                                   int i, int j, int* out);

/* ---- interval function -------------------------------------------------- */

PATHCONV_API pathconv_status pathconv_interval(const pathconv_graph* g,
                                               const pathconv_bounds* rb, const int* s,
                                               int s_len, int force_generic,
                                               pathconv_interval_result** out);
PATHCONV_API void pathconv_interval_result_free(pathconv_interval_result* r);
PATHCONV_API int pathconv_interval_member_count(const pathconv_interval_result* r);
PATHCONV_API const int* pathconv_interval_members(const pathconv_interval_result* r);
PATHCONV_API int pathconv_interval_witness_count(const pathconv_interval_result* r);
/* Witnesses are indexed 0..count-1 in ascending order of z. */
PATHCONV_API pathconv_status pathconv_interval_witness(const pathconv_interval_result* r,
                                                       int index, int* z, int* u, int* v,
                                                       const int** path, int* path_len);

/* Decides z in I(S). *out_member is 0/1; when a witness path exists it is
 * copied into path_buf (capacity path_cap) and *path_len set, else
 * *path_len = 0 (z in S, or not a member). */
PATHCONV_API pathconv_status pathconv_interval_contains(const pathconv_graph* g,
                                                        const pathconv_bounds* rb,
                                                        const int* s, int s_len, int z,
                                                        int* out_member, int* witness_u,
                                                        int* witness_v, int* path_buf,
                                                        int path_cap, int* path_len);

/* ---- convexity test and hull -------------------------------------------- */

PATHCONV_API pathconv_status pathconv_convex_test(const pathconv_graph* g,
                                                  const pathconv_bounds* rb, const int* s,
                                                  int s_len, int force_generic,
                                                  pathconv_certificate** out);
PATHCONV_API void pathconv_certificate_free(pathconv_certificate* cert);
PATHCONV_API int pathconv_certificate_is_convex(const pathconv_certificate* cert);
PATHCONV_API int pathconv_certificate_augmenting_count(const pathconv_certificate* cert);
PATHCONV_API const int* pathconv_certificate_augmenting(const pathconv_certificate* cert);
/* Fails with PATHCONV_E_INVALID_ARGUMENT on a convex certificate. */
PATHCONV_API pathconv_status pathconv_certificate_witness(const pathconv_certificate* cert,
                                                          int* z, int* u, int* v,
                                                          const int** path, int* path_len);

PATHCONV_API pathconv_status pathconv_hull(const pathconv_graph* g, const pathconv_bounds* rb,
                                           const int* s, int s_len, int force_generic,
                                           pathconv_hull_trace** out);
PATHCONV_API void pathconv_hull_trace_free(pathconv_hull_trace* trace);
PATHCONV_API int pathconv_hull_stage_count(const pathconv_hull_trace* trace);
PATHCONV_API int pathconv_hull_stage_size(const pathconv_hull_trace* trace, int stage);
PATHCONV_API const int* pathconv_hull_stage(const pathconv_hull_trace* trace, int stage);

PATHCONV_API pathconv_status pathconv_hull_contains(const pathconv_graph* g,
                                                    const pathconv_bounds* rb, const int* s,
                                                    int s_len, int z, int* out_member);

/* ---- exact invariant solvers -------------------------------------------- */

/* size_cap <= 0 selects the default (12). */
PATHCONV_API pathconv_status pathconv_convexity_number(const pathconv_graph* g,
                                                       const pathconv_bounds* rb, int size_cap,
                                                       pathconv_solver_result** out);
PATHCONV_API pathconv_status pathconv_interval_number(const pathconv_graph* g,
                                                      const pathconv_bounds* rb, int size_cap,
                                                      pathconv_solver_result** out);
PATHCONV_API pathconv_status pathconv_hull_number(const pathconv_graph* g,
                                                  const pathconv_bounds* rb, int size_cap,
                                                  pathconv_solver_result** out);
PATHCONV_API void pathconv_solver_result_free(pathconv_solver_result* r);
PATHCONV_API int pathconv_solver_value(const pathconv_solver_result* r);
PATHCONV_API int pathconv_solver_set_size(const pathconv_solver_result* r);
PATHCONV_API const int* pathconv_solver_set(const pathconv_solver_result* r);
PATHCONV_API unsigned long long pathconv_solver_explored(const pathconv_solver_result* r);
PATHCONV_API int pathconv_solver_capped(const pathconv_solver_result* r);
PATHCONV_API const char* pathconv_solver_note(const pathconv_solver_result* r);

/* Vertices that must belong to every interval set and hull set; written to
 * buf (capacity buf_cap), count in *out_len. */
PATHCONV_API pathconv_status pathconv_mandatory_vertices(const pathconv_graph* g,
                                                         const pathconv_bounds* rb, int* buf,
                                                         int buf_cap, int* out_len);

/* ---- built-in differential suite ---------------------------------------- */

/* cap <= 0 selects the default (7). *report_out (free with
 * pathconv_string_free) gets one line per check group. */
PATHCONV_API pathconv_status pathconv_selfcheck(unsigned seed, int cap, char** report_out,
                                                int* checks_out, int* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* PATHCONV_H */
