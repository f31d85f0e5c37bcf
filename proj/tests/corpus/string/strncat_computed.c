#include <string.h>

void append(const char *s) {
  char d[32];
  d[0] = 0;
  strncat(d, s, sizeof d - strlen(d) - 1);
}
