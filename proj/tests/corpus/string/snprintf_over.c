#include <stdio.h>

void fmt(const char *s) {
  char b[8];
  snprintf(b, 16, "%s", s);  // EXPECT: SEC.string.2
}
