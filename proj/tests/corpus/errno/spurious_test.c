#include <errno.h>
#include <stdlib.h>

int parse(const char *s) {
  int n;
  errno = 0;
  n = atoi(s);
  if (errno != 0) {  // EXPECT: SEC.errno.3
    return -1;
  }
  return n;
}
