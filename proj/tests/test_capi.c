/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <string.h>

#include "trigroup/trigroup.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* part) { return s != NULL && strstr(s, part) != NULL; }

int main(void) {
  char* out = NULL;
  int ok = 0;
  uint64_t count = 0;

  EXPECT(strlen(tg_version()) > 0);

  EXPECT(tg_words_enumerate(2, 7, &out) == TG_OK);
  EXPECT(contains(out, "\"count_formula\": 28"));
  tg_string_free(out);

  EXPECT(tg_relator_count(5, "2/5", &count) == TG_OK);
  EXPECT(count == 13);
  EXPECT(tg_relator_count(5, "nonsense", &count) == TG_ERR_PARSE);
  EXPECT(strlen(tg_last_error()) > 0);
  EXPECT(tg_relator_count(5, "1/2", &count) == TG_OK);
  EXPECT(strlen(tg_last_error()) == 0);

  tg_presentation* p = NULL;
  EXPECT(tg_presentation_sample(5, "2/5", 7, &p) == TG_OK);
  EXPECT(tg_enumerate_diagrams(p, 2, 5, "1/100", 1, 0, &out, &ok) == TG_OK);
  EXPECT(ok == 1);
  EXPECT(contains(out, "\"diagram_count\": 159"));
  tg_string_free(out);
  EXPECT(tg_enumerate_diagrams(p, 6, 5, "1/100", 1, 0, &out, &ok) == TG_ERR_CAP_EXCEEDED);
  EXPECT(contains(tg_last_error(), "cap"));

  tg_presentation* q = NULL;
  EXPECT(tg_presentation_from_json("{\"m\": 2, \"relators\": [\"abb\"]}", &q) == TG_OK);
  tg_ball* g = NULL;
  EXPECT(tg_ball_build(q, 4, 12, 1000000, &g) == TG_OK);
  EXPECT(tg_delta_estimate(g, 0, 1, 1, &out) == TG_OK);
  EXPECT(contains(out, "\"defect\": 1,"));
  tg_string_free(out);
  tg_ball_free(g);
  tg_presentation_free(q);
  EXPECT(tg_presentation_from_json("{\"m\": 2, \"relators\": [\"aA\"]}", &q) == TG_ERR_PARSE);
  EXPECT(contains(tg_last_error(), "presentation.relators[0]"));

  tg_complex* y = NULL;
  EXPECT(tg_complex_from_json("{\"edges\": 3, \"faces\": [{\"index\": 1, \"boundary\": [1, 2, 3]},"
                              " {\"index\": 1, \"boundary\": [1, 2, 3]}]}",
                              &y) == TG_OK);
  EXPECT(tg_complex_cancel_report(y, &out) == TG_OK);
  EXPECT(contains(out, "\"cancel\": 3"));
  tg_string_free(out);
  EXPECT(tg_fulfil_exact(y, 2, 8, 6, 1, &out, &ok) == TG_OK);
  tg_string_free(out);
  EXPECT(tg_fulfil_exact(y, 9, 8, 6, 1, &out, &ok) == TG_ERR_CAP_EXCEEDED);
  tg_complex_free(y);

  EXPECT(tg_constants_pipeline("0.35", NULL, NULL, NULL, 800, 20, &out, &ok) == TG_OK);
  EXPECT(ok == 1);
  EXPECT(contains(out, "128162"));
  tg_string_free(out);
  EXPECT(tg_constants_pipeline("0.39", NULL, NULL, NULL, 800, 20, &out, &ok) == TG_ERR_PRECONDITION);

  const char* grid[] = {"0.3", "0.35"};
  EXPECT(tg_sweep_csv(grid, 2, NULL, NULL, 800, 10, &out) == TG_OK);
  EXPECT(contains(out, "d0,d_prime,k,L,N\n"));
  tg_string_free(out);

  EXPECT(tg_fig1_demo(&out, &ok) == TG_OK);
  EXPECT(ok == 1);
  tg_string_free(out);

  EXPECT(tg_presentation_report(NULL, &out) == TG_ERR_INVALID_ARGUMENT);
  tg_presentation_free(p);
  tg_presentation_free(NULL);

  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
