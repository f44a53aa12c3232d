/* weilab — exact computation with Weil algebras.
 *
 * C interface of the shared library. All functions return a weilab_status;
 * report output comes back as a malloc'd NUL-terminated string the caller
 * releases with weilab_string_free. Handles are opaque and must be closed
 * with weilab_algebra_close. The library keeps a thread-local message for
 * the last error.
 */
#ifndef WEILAB_H
#define WEILAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum weilab_status {
  WEILAB_OK = 0,
  WEILAB_ERR_PARSE = 1,     /* malformed polynomial or spec text */
  WEILAB_ERR_DOMAIN = 2,    /* non-local presentation, context mismatch */
  WEILAB_ERR_USAGE = 3,     /* invalid arguments */
  WEILAB_ERR_INTERNAL = 4,
} weilab_status;

typedef struct weilab_algebra weilab_algebra;

/* Message for the most recent failure on this thread; never NULL. */
const char* weilab_last_error(void);

void weilab_string_free(char* s);

/* Builds the algebra from a spec file on disk / from spec text. */
weilab_status weilab_algebra_open(const char* path, weilab_algebra** out);
weilab_status weilab_algebra_parse(const char* text, const char* name,
                                   weilab_algebra** out);
void weilab_algebra_close(weilab_algebra* a);

size_t weilab_algebra_dim(const weilab_algebra* a);

/* Report builders; `json` selects the machine layout. */
weilab_status weilab_info(const weilab_algebra* a, int json, char** out);
weilab_status weilab_basis(const weilab_algebra* a, int json, char** out);
weilab_status weilab_multable(const weilab_algebra* a, int json, char** out);
weilab_status weilab_nf(const weilab_algebra* a, const char* poly, int json,
                        char** out);
weilab_status weilab_socle(const weilab_algebra* a, int json, char** out);
/* weight_bound 0 selects the default bound (4 * r). */
weilab_status weilab_classify(const weilab_algebra* a, uint32_t weight_bound,
                              int use_order_theorem, int json, char** out);
weilab_status weilab_weights(const weilab_algebra* a, uint32_t weight_bound,
                             int json, char** out);
weilab_status weilab_derivations(const weilab_algebra* a, int json, char** out);
weilab_status weilab_fixed(const weilab_algebra* a, int json, char** out);
/* map is "x -> -x; y -> y" in the polynomial grammar. */
weilab_status weilab_aut_verify(const weilab_algebra* a, const char* map,
                                int json, char** out);
weilab_status weilab_aut_constraints(const weilab_algebra* a, int json,
                                     char** out);
/* Constraint export only: one "0 = ..." line per equation. */
weilab_status weilab_aut_constraints_export(const weilab_algebra* a,
                                            char** out);
weilab_status weilab_conjecture(const weilab_algebra* a, int json, char** out);

typedef struct weilab_scan_config {
  uint64_t seed;
  uint32_t k_min, k_max;
  uint32_t r_min, r_max;
  uint32_t gens_min, gens_max;
  uint32_t terms_min, terms_max;
  uint32_t count;
  uint32_t weight_bound;  /* 0: default */
  uint32_t dim_cap;       /* 0: default */
  int homogeneous;
  uint32_t min_degree;
  int include_timing;
  /* coefficient pool; NULL selects {-2, -1, 1, 2} */
  const int64_t* pool;
  size_t pool_len;
} weilab_scan_config;

/* Fills a config with the default field values. */
void weilab_scan_config_init(weilab_scan_config* config);

weilab_status weilab_scan(const weilab_scan_config* config, int json,
                          char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WEILAB_H */
