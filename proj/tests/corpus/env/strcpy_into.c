#include <stdlib.h>
#include <string.h>

void overwrite(void) {
  char *p = getenv("PATH");
  strncpy(p, "/bin", 4);  // EXPECT: SEC.env.1
}
