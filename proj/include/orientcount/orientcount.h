#ifndef ORIENTCOUNT_H
#define ORIENTCOUNT_H

#include <stddef.h>

#if defined(_WIN32)
#define OC_API __declspec(dllexport)
#else
#define OC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values match the engine's internal error kinds. */
typedef enum oc_status {
  OC_OK = 0,
  OC_INVALID_INPUT = 1,
  OC_NON_SYMMETRIC_ADJACENCY = 2,
  OC_EULER_VIOLATION = 3,
  OC_LOOP_EDGE = 4,
  OC_MULTI_EDGE = 5,
  OC_NOT_THREE_CONNECTED = 6,
  OC_SPECIALS_NOT_ON_OUTER_FACE = 7,
  OC_BAD_PARAMETERS = 8,
  OC_UNKNOWN_FACE = 9,
  OC_NO_CANONICAL_DEFINED = 10,
  OC_INFEASIBLE = 11,
  OC_CYCLE_NOT_DIRECTED = 12,
  OC_CAP_EXCEEDED = 13,
  OC_LATTICE_VIOLATION = 14,
  OC_NO_COLORING = 15,
  OC_MULTIPLE_COLORINGS = 16,
  OC_NOT_INNER_TRIANGULATION = 17,
  OC_STALLED = 18,
  OC_AXIOM_VIOLATION = 19,
  OC_NOT_GRID_LIKE = 20,
  OC_SIZE_EXCEEDED = 21,
  OC_DISCONNECTED = 22,
  OC_NOT_PRIMITIVE = 23,
  OC_NO_CONVERGENCE = 24,
  OC_UNKNOWN_SUITE = 25,
  OC_PARSE_ERROR = 26,
  OC_CHECK_FAILED = 50, /* call succeeded, but a verification did not pass */
  OC_INTERNAL = 99
} oc_status;

/* A planar map with its out-degree spec, edge rules and special vertices. */
typedef struct oc_map oc_map;

OC_API const char* oc_version(void);
OC_API const char* oc_status_name(int status);
/* Message of the last failed call on this thread; "" after a success. */
OC_API const char* oc_last_error(void);
/* Every char* handed out by the library is freed with this. */
OC_API void oc_string_free(char* s);

/* family: grid, torus-grid, augmented-grid, quad-grid, tri-grid, tri-torus,
   augmented-tri-grid, hex-grid, stacked, strip. `stacking` is only read for
   stacked triangulations. */
OC_API int oc_map_generate(const char* family, int k, int l, const int* stacking, int nstacking, oc_map** out);
/* pmap v1 or JSON text. */
OC_API int oc_map_parse(const char* text, oc_map** out);
/* format: "pmap", "json" or "dot". */
OC_API int oc_map_write(const oc_map* m, const char* format, char** out);
OC_API void oc_map_free(oc_map* m);
OC_API int oc_map_size(const oc_map* m, int* vertices, int* edges, int* faces);
OC_API int oc_map_set_alpha(oc_map* m, const int* alpha, int n);
/* `alpha v: k` lines, a JSON array or a separated list. */
OC_API int oc_map_set_alpha_text(oc_map* m, const char* text);

typedef struct oc_count_options {
  int threads;     /* 0 or 1: single threaded */
  int method;      /* 0 auto, 1 search, 2 frontier, 3 brute force */
  int rigid;       /* also report rigid edges */
  int timing;      /* include wall-clock ms (output no longer reproducible) */
} oc_count_options;

/* JSON results. Counts are decimal strings. */
OC_API int oc_count(const oc_map* m, const oc_count_options* opt, char** json);
/* At most `limit` orientations, as bit strings over the edges (1: along the
   canonical dart); limit 0 means no limit. */
OC_API int oc_enumerate(const oc_map* m, long long limit, char** json);
/* format: "json" or "dot". */
OC_API int oc_lattice(const oc_map* m, const char* format, long long cap, char** out);
/* a1..a3 < 0: take the map's specials, else its outer triangle. */
OC_API int oc_schnyder(const oc_map* m, int a1, int a2, int a3, int enumerate, long long limit, int threads,
                       char** json);
/* s, t < 0: ends of the outer dart. with_signs needs an inner triangulation. */
OC_API int oc_bipolar(const oc_map* m, int s, int t, int with_signs, long long limit, int threads, char** json);
/* via: "matching" or "f-factor". */
OC_API int oc_reduce(const oc_map* m, const char* via, int threads, char** json);
OC_API int oc_eigen(int two_k, double tol, char** json);
/* (Lambda_{2a} / Lambda_{2b})^(1/(2(2a-2b))), e.g. 10 and 8 give the 1/4 power,
   with certified ends from the Collatz-Wielandt intervals. */
OC_API int oc_eigen_ratio(int two_a, int two_b, double tol, char** json);
/* kind: "general", "triangulation", "quadrangulation", "bipolar" or NULL to
   guess. measured: decimal count, "auto" to count, or NULL. */
OC_API int oc_bounds(const oc_map* m, const char* kind, const char* measured, int s, int t, char** json);
/* suite NULL or "all" runs everything. OC_CHECK_FAILED when a check fails.
   Wall-clock readings are left out unless `timing` is set. */
OC_API int oc_verify(const char* suite, int threads, int timing, char** json);
OC_API int oc_verify_suite_count(void);
OC_API const char* oc_verify_suite_name(int i);

#ifdef __cplusplus
}
#endif

#endif
