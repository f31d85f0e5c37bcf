#include <string.h>

void copy(void) {
  char d[16];
  char s[16];
  s[0] = 0;
  memcpy(d, s, sizeof d);
}
