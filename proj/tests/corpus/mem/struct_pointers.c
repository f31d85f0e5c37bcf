#include <string.h>

struct rec { char tag; long value; };

int equal(struct rec *a, struct rec *b) {
  return memcmp(a, b, sizeof *a) == 0;  // EXPECT: SEC.mem.1
}
