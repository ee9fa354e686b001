/*
 * vertex_energy.h - C interface to the vertex-energy library.
 *
 * Graphs and verification results are opaque handles owned by the caller and
 * released with the matching *_free function. Every fallible call returns a
 * vel_status; on failure vel_last_error() describes the problem for the
 * calling thread.
 *
 * Derived graphs use the copy-major vertex order: vertex (copy c, base i) has
 * flat index c * n + i, where n is the base vertex count. Copy 0 of an
 * m-splitting graph is the original graph.
 */
#ifndef VERTEX_ENERGY_H
#define VERTEX_ENERGY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VEL_BUILDING_LIBRARY)
#    define VEL_API __declspec(dllexport)
#  else
#    define VEL_API __declspec(dllimport)
#  endif
#else
#  define VEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vel_status {
    VEL_OK = 0,
    VEL_ERROR_INVALID_ARGUMENT = 1,
    VEL_ERROR_PARSE = 2,
    VEL_ERROR_NO_CONVERGENCE = 3,
    VEL_ERROR_BUFFER_TOO_SMALL = 4,
    VEL_ERROR_INTERNAL = 5
} vel_status;

typedef enum vel_family {
    VEL_FAMILY_PATH = 0,
    VEL_FAMILY_CYCLE = 1,
    VEL_FAMILY_COMPLETE = 2,
    VEL_FAMILY_STAR = 3,
    VEL_FAMILY_COMPLETE_BIPARTITE = 4
} vel_family;

typedef enum vel_derive_op {
    VEL_DERIVE_SPLITTING = 0,
    VEL_DERIVE_SHADOW = 1
} vel_derive_op;

typedef enum vel_claim {
    VEL_CLAIM_SPLITTING_VERTEX_ENERGY = 0,
    VEL_CLAIM_SPLITTING_TOTAL_ENERGY = 1,
    VEL_CLAIM_SPLITTING_SPECTRUM = 2,
    VEL_CLAIM_SHADOW_VERTEX_ENERGY = 3,
    VEL_CLAIM_SHADOW_TOTAL_ENERGY = 4,
    VEL_CLAIM_SHADOW_SPECTRUM = 5,
    VEL_CLAIM_ENERGY_PARTITION = 6
} vel_claim;

typedef struct vel_graph vel_graph;
typedef struct vel_report_set vel_report_set;

typedef struct vel_verify_options {
    double tol;       /* theorem tolerance, default 1e-8 */
    double eigen_tol; /* Jacobi stopping tolerance, default 1e-12 */
} vel_verify_options;

/* Borrowed view of one report; pointers stay valid until the owning set is freed. */
typedef struct vel_report_view {
    vel_claim claim;
    const char* claim_name;
    const char* graph_descriptor;
    size_t m; /* 0 for the energy-partition claim */
    double max_abs_deviation;
    double tolerance;
    int passed;
    const double* deviations; /* per vertex or per eigenvalue; NULL for scalar claims */
    size_t deviation_count;
    const char* error; /* empty unless the computation itself failed */
} vel_report_view;

VEL_API const char* vel_version(void);
VEL_API const char* vel_status_string(vel_status status);
VEL_API const char* vel_last_error(void);
/* 1-based line and byte of the last parse error; 0 when unknown. */
VEL_API void vel_last_error_location(size_t* line, size_t* byte);

/* Graph construction. `endpoints` holds 2 * edge_count vertex indices. */
VEL_API vel_status vel_graph_from_edges(size_t n, const size_t* endpoints, size_t edge_count, vel_graph** out);
VEL_API vel_status vel_graph_parse_edge_list(const char* text, size_t length, vel_graph** out);
VEL_API vel_status vel_graph_parse_graph6(const char* text, size_t length, vel_graph** out);
VEL_API vel_status vel_graph_named(vel_family family, size_t a, size_t b, vel_graph** out);
VEL_API vel_status vel_graph_derive(const vel_graph* g, vel_derive_op op, size_t m, vel_graph** out);
VEL_API void vel_graph_free(vel_graph* g);

VEL_API size_t vel_graph_vertex_count(const vel_graph* g);
VEL_API size_t vel_graph_edge_count(const vel_graph* g);
/* Writes edges as (i, j) pairs with i < j in ascending order. */
VEL_API vel_status vel_graph_edges(const vel_graph* g, size_t* endpoints, size_t capacity_pairs);

/*
 * Serializers. `length` receives the encoded length excluding the terminating
 * NUL. If `buffer` is NULL or `capacity` <= length, VEL_ERROR_BUFFER_TOO_SMALL
 * is returned and nothing is written.
 */
VEL_API vel_status vel_graph_to_graph6(const vel_graph* g, char* buffer, size_t capacity, size_t* length);
VEL_API vel_status vel_graph_to_edge_list(const vel_graph* g, char* buffer, size_t capacity, size_t* length);

VEL_API vel_status vel_vertex_label(size_t flat_index, size_t base_vertex_count, size_t* copy_index,
                                    size_t* base_index);

/* Spectral quantities. Output buffers need vel_graph_vertex_count(g) entries. */
VEL_API vel_status vel_graph_spectrum(const vel_graph* g, double eigen_tol, double* eigenvalues, size_t capacity);
VEL_API vel_status vel_graph_vertex_energies(const vel_graph* g, double eigen_tol, double* energies, size_t capacity,
                                             double* graph_energy);

/* Theorem verification. */
VEL_API vel_verify_options vel_verify_options_default(void);
VEL_API vel_status vel_verify_graph(const vel_graph* g, const char* descriptor, const size_t* m_values,
                                    size_t m_count, const vel_verify_options* options, vel_report_set** out);
VEL_API vel_status vel_verify_default_corpus(uint64_t seed, const size_t* m_values, size_t m_count,
                                             const vel_verify_options* options, vel_report_set** out);
VEL_API size_t vel_report_set_size(const vel_report_set* set);
VEL_API vel_status vel_report_set_get(const vel_report_set* set, size_t index, vel_report_view* out);
VEL_API int vel_report_set_all_passed(const vel_report_set* set);
VEL_API void vel_report_set_free(vel_report_set* set);

#ifdef __cplusplus
}
#endif

#endif /* VERTEX_ENERGY_H */
