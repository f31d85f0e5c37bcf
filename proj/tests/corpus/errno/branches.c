#include <errno.h>
#include <stdlib.h>

double parse(const char *s, int as_float) {
  double r;
  errno = 0;
  if (as_float) {
    r = strtod(s, 0);
  } else {
    r = strtol(s, 0, 10);
  }
  if (errno != 0) {
    r = 0;
  }
  return r;
}
