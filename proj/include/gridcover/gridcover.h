#ifndef GRIDCOVER_H
#define GRIDCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GRIDCOVER_BUILDING)
#define GC_API __declspec(dllexport)
#else
#define GC_API __declspec(dllimport)
#endif
#else
#define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_PARSE = 1,
  GC_ERR_DOMAIN = 2,
  GC_ERR_PRECONDITION = 3,
  GC_ERR_TOO_LARGE = 4,
  GC_ERR_INFEASIBLE = 5,
  GC_ERR_IO = 6,
  GC_ERR_INTERNAL = 7,
  GC_ERR_ARGUMENT = 8
} gc_status;

typedef enum gc_coverage {
  GC_COVERED = 0,
  GC_COUNTEREXAMPLE = 2,
  GC_INCONCLUSIVE = 3
} gc_coverage;

typedef struct gc_grid gc_grid;
typedef struct gc_construction gc_construction;

/* Rational quantities are passed as strings: "1", "3/2", "0.25", "1e-3". */
typedef struct gc_params {
  const char* k;
  double alpha;
  double beta;
} gc_params;

typedef struct gc_construct_options {
  const char* d;  /* NULL: automatic spacing */
  int phase_scan; /* lattice translations per axis, >= 1 */
} gc_construct_options;

typedef struct gc_verify_options {
  const char* h;     /* NULL: k/16 */
  int halvings;      /* further passes at h/2, h/4, ... */
  int exact_fallback;
} gc_verify_options;

typedef struct gc_oracle_options {
  const char* spacing; /* NULL: 1/2 */
  size_t max_candidates;
  size_t max_subset;
} gc_oracle_options;

/* Message for the last failed call on this thread; never NULL. */
GC_API const char* gc_last_error(void);
GC_API const char* gc_version(void);
GC_API void gc_string_free(char* s);

/* GC_OK when k is a positive rational, alpha is positive and beta non-negative. */
GC_API gc_status gc_params_check(const gc_params* p);

/* ASCII mask ('#' filled, '.' empty, top row first) or {"squares": [[i,j],...]}. */
GC_API gc_status gc_grid_parse(const char* text, gc_grid** out);
GC_API gc_status gc_grid_cross(int64_t n, gc_grid** out);
GC_API gc_status gc_grid_rectangle(int64_t width, int64_t height, gc_grid** out);
GC_API void gc_grid_free(gc_grid* g);
GC_API int64_t gc_grid_area(const gc_grid* g);
GC_API int64_t gc_grid_perimeter(const gc_grid* g);
GC_API int gc_grid_is_convex(const gc_grid* g);
GC_API gc_status gc_grid_json(const gc_grid* g, char** out);
GC_API gc_status gc_grid_mask(const gc_grid* g, char** out);

/* g may be NULL, in which case area and perimeter are taken from the arguments. */
GC_API gc_status gc_bounds_json(const gc_params* p, const gc_grid* g, int64_t area, int64_t perimeter, char** out);

/* options may be NULL. */
GC_API gc_status gc_construct(const gc_grid* g, const gc_params* p, const gc_construct_options* options,
                              gc_construction** out);
GC_API void gc_construction_free(gc_construction* c);
GC_API double gc_construction_cost(const gc_construction* c);
GC_API gc_status gc_construction_path_json(const gc_construction* c, char** out);
/* "null" for a single-stop cover, which uses no lattice. */
GC_API gc_status gc_construction_stops_json(const gc_construction* c, char** out);
GC_API gc_status gc_construction_audit_json(const gc_construction* c, char** out);
GC_API gc_status gc_construction_svg(const gc_construction* c, double scale, char** out);

/* Certifies a path (JSON as written by gc_construction_path_json) against the grid. */
GC_API gc_status gc_verify(const gc_grid* g, const char* path_json, const char* k, const gc_verify_options* options,
                           gc_coverage* result, char** report_json);
/* Audit of an arbitrary path: bounds, trade-off inequality, ratios. */
GC_API gc_status gc_audit_path(const gc_grid* g, const gc_params* p, const char* path_json, char** out);

GC_API gc_status gc_oracle(const gc_grid* g, const gc_params* p, const gc_oracle_options* options, char** path_json);

/* Seeded instance generation plus ratio study. csv and json may be NULL. */
GC_API gc_status gc_benchmark(uint64_t seed, size_t count, int64_t max_area, const gc_params* p,
                              const gc_oracle_options* oracle, int workers, char** csv, char** json);

/* path_json may be NULL. */
GC_API gc_status gc_render_svg(const gc_grid* g, const char* path_json, double scale, char** out);

#ifdef __cplusplus
}
#endif

#endif
