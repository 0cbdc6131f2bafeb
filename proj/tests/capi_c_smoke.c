/* The public header must compile as C and the library must link from C. */
#include <stdio.h>

#include "exactq/exactq.h"

int main(void) {
  exq_function* f = NULL;
  exq_certificate* c = NULL;
  int ok = 0;
  if (exq_function_parse("profile:0,1,1,0", &f) != EXQ_OK) return 1;
  if (exq_synthesize(f, &c) != EXQ_OK) return 1;
  if (exq_certificate_verify(c, &ok, NULL) != EXQ_OK || !ok) return 1;
  if (exq_certificate_queries(c) != 2) return 1;
  printf("%s %u\n", exq_certificate_level(c), exq_certificate_queries(c));
  exq_certificate_free(c);
  exq_function_free(f);
  return 0;
}
