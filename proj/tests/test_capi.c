#include <stdio.h>
#include <string.h>

#include "fanodelta/fanodelta.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

int main(void) {
  fd_result* res = NULL;

  EXPECT(fd_bundle(1, "2", "1", "0", "0", &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "\"value\": \"6/7\""));
  EXPECT(contains(fd_result_text(res), "6/7"));
  EXPECT(fd_result_error(res)[0] == '\0');

  /* the JSON document re-checks byte-for-byte */
  {
    fd_result* chk = NULL;
    EXPECT(fd_check(fd_result_json(res), &chk) == FD_OK);
    fd_result_free(chk);
  }
  fd_result_free(res);

  EXPECT(fd_cone(1, "1", "1", "0", &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "3/4"));
  fd_result_free(res);

  EXPECT(fd_cone(2, "1", "ge1", "0", &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "2/3"));
  fd_result_free(res);

  EXPECT(fd_cone_iterate(2, 3, 2, "ge1", &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "5/9"));
  fd_result_free(res);

  EXPECT(fd_branched_cone(2, 2, 3, 1, NULL, &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "K-semistable"));
  fd_result_free(res);

  EXPECT(fd_angle(2, "2/3", NULL, 1, 1, 0, 0, &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "3/4"));
  fd_result_free(res);

  EXPECT(fd_calabi(1, "2", NULL, "1", 4, &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "4/3"));
  EXPECT(contains(fd_result_csv(res), "tau,phi"));
  fd_result_free(res);

  EXPECT(fd_verify(0, "smoke", 0, &res) == FD_OK);
  EXPECT(contains(fd_result_json(res), "\"schema\": \"1\""));
  fd_result_free(res);

  /* errors */
  EXPECT(fd_bundle(1, "1", "1", "0", "0", &res) == FD_ERR_DOMAIN);
  EXPECT(contains(fd_result_error(res), "1-r<a<1"));
  fd_result_free(res);

  EXPECT(fd_cone(1, "1", "0.9", "0", &res) == FD_ERR_PARSE);
  fd_result_free(res);

  EXPECT(fd_bundle(1, NULL, "1", "0", "0", &res) == FD_ERR_PARSE);
  fd_result_free(res);

  EXPECT(fd_verify(0, "nope", 0, &res) == FD_ERR_PARSE);
  fd_result_free(res);

  EXPECT(fd_check("{\"schema\":\"1\",\"command\":\"bundle\"}", &res) != FD_OK);
  fd_result_free(res);

  EXPECT(fd_bundle(1, "2", "1", "0", "0", NULL) == FD_ERR_INTERNAL);

  fd_result_free(NULL);
  EXPECT(strcmp(fd_result_json(NULL), "") == 0);
  EXPECT(strcmp(fd_result_error(NULL), "") == 0);
  EXPECT(strcmp(fd_status_name(FD_ERR_ORACLE), "oracle disagreement") == 0);
  EXPECT(strcmp(fd_status_name(FD_ERR_PARSE), "parse error") == 0);
  EXPECT(strcmp(fd_version(), "1.0.0") == 0);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API ok\n");
  return 0;
}
