#include <string.h>

void join(char *dst, const char *tail) {
  strcat(dst, tail);  // EXPECT: SEC.string.1
}
