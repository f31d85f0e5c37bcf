#include <errno.h>

int failed(void) {
  return errno != 0;  // EXPECT: SEC.errno.3
}
