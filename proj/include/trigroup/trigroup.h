/* C interface to the trigroup library.
 *
 * Every function returns a tg_status. On failure, tg_last_error() describes
 * the problem for the calling thread. Strings returned through char** are
 * owned by the caller and must be released with tg_string_free. Reports are
 * JSON documents unless stated otherwise.
 */
#ifndef TRIGROUP_H
#define TRIGROUP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TG_API __declspec(dllexport)
#else
#define TG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INVALID_ARGUMENT = 1,
  TG_ERR_PARSE = 2,
  TG_ERR_CAP_EXCEEDED = 3,
  TG_ERR_PRECONDITION = 4,
  TG_ERR_INTERNAL = 5
} tg_status;

typedef struct tg_presentation tg_presentation;
typedef struct tg_complex tg_complex;
typedef struct tg_ball tg_ball;

TG_API const char* tg_version(void);
/* Message for the last failure on this thread; empty after success. */
TG_API const char* tg_last_error(void);
TG_API void tg_string_free(char* s);

/* Rationals are passed as text: "p/q", integers or decimals. */

/* ---- words ---- */
/* Count and (for m <= cap) the list of cyclically reduced length-3 words. */
TG_API tg_status tg_words_enumerate(uint32_t m, uint32_t cap, char** out_json);
/* Free and cyclic reduction of a word over a-z / A-Z. */
TG_API tg_status tg_words_reduce(uint32_t m, const char* word, char** out_json);
/* Histogram of `draws` sampled words with a chi-square uniformity test. */
TG_API tg_status tg_words_sample(uint32_t m, uint64_t draws, uint64_t seed, char** out_json);

/* ---- presentations ---- */
TG_API tg_status tg_relator_count(uint32_t m, const char* density, uint64_t* out_count);
TG_API tg_status tg_presentation_sample(uint32_t m, const char* density, uint64_t seed, tg_presentation** out);
TG_API tg_status tg_presentation_from_json(const char* json, tg_presentation** out);
TG_API tg_status tg_presentation_to_json(const tg_presentation* p, char** out_json);
/* Presentation plus derived properties (symmetry classes, proper powers). */
TG_API tg_status tg_presentation_report(const tg_presentation* p, char** out_json);
TG_API void tg_presentation_free(tg_presentation* p);

/* ---- complexes ---- */
TG_API tg_status tg_complex_from_json(const char* json, tg_complex** out);
TG_API tg_status tg_complex_to_json(const tg_complex* y, char** out_json);
TG_API void tg_complex_free(tg_complex* y);
/* Edge degrees and Cancel. */
TG_API tg_status tg_complex_cancel_report(const tg_complex* y, char** out_json);
/* Red with per-edge contributions, delta per face, and the chain inequality. */
TG_API tg_status tg_complex_red_report(const tg_complex* y, char** out_json);
/* Chain inequality on `samples` random complexes with at most max_faces faces. */
TG_API tg_status tg_chain_check(uint64_t samples, uint32_t max_faces, uint64_t seed, unsigned workers, char** out_json,
                                int* all_hold);

/* ---- fulfilment ---- */
TG_API tg_status tg_fulfil_exact(const tg_complex* y, uint32_t m, uint32_t max_m, uint32_t max_n, unsigned workers,
                                 char** out_json, int* all_hold);
TG_API tg_status tg_fulfil_montecarlo(const tg_complex* y, uint32_t m, uint64_t trials, uint64_t seed, unsigned workers,
                                      char** out_json);
/* Sub-tuples of p fulfilling y (at most `limit`) and Cancel - Red against 3(d + epsilon)|Y|. */
TG_API tg_status tg_fulfil_presentation(const tg_complex* y, const tg_presentation* p, const char* epsilon, size_t limit,
                                        char** out_json, int* all_hold);

/* ---- enumeration ---- */
TG_API tg_status tg_enumerate_diagrams(const tg_presentation* p, uint32_t max_faces, uint32_t cap, const char* epsilon,
                                       unsigned workers, int include_diagrams, char** out_json, int* all_hold);

/* ---- thresholds ---- */
TG_API tg_status tg_constants_pipeline(const char* d0, const char* a1, const char* a2, const char* margin, int slim_factor,
                                       unsigned precision, char** out_json, int* contradiction);
/* CSV with header d0,d_prime,k,L,N; one row per grid value. */
TG_API tg_status tg_sweep_csv(const char* const* grid, size_t count, const char* a1, const char* a2, int slim_factor,
                              unsigned precision, char** out_csv);

/* ---- Cayley balls ---- */
TG_API tg_status tg_ball_build(const tg_presentation* p, uint32_t radius, uint32_t max_radius, uint64_t max_vertices,
                               tg_ball** out);
TG_API tg_status tg_ball_from_json(const char* json, tg_ball** out);
TG_API tg_status tg_ball_to_json(const tg_ball* g, char** out_json);
TG_API void tg_ball_free(tg_ball* g);
/* samples = 0 examines every triangle of closed vertices. */
TG_API tg_status tg_delta_estimate(const tg_ball* g, uint64_t samples, uint64_t seed, unsigned workers, char** out_json);
TG_API tg_status tg_fig1_demo(char** out_json, int* all_hold);

#ifdef __cplusplus
}
#endif

#endif
