#include <errno.h>
#include <stdlib.h>

long parse(const char *s) {
  long v;
  errno = 0;
  v = strtol(s, 0, 10);
  if (errno) {
    return 0;
  }
  return v;
}
