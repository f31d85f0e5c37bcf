#include <string.h>

int same_name(void) {
  char x[8];
  char y[8];
  return memcmp(x, y, 8);  // EXPECT: SEC.mem.2
}
