#include <string.h>

void copy(char *dst, const char *src) {
  /* seclint-deviation: SEC.string.2 justification for a different rule */
  strcpy(dst, src);  // EXPECT: SEC.string.1
}
