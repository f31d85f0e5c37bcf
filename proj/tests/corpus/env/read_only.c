#include <stdlib.h>
#include <string.h>

size_t home_len(void) {
  char *p = getenv("HOME");
  size_t n = 0;
  if (p != 0) {
    n = strlen(p);
  }
  return n;
}
