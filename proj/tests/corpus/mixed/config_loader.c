#include <ctype.h>
#include <stdlib.h>
#include <string.h>

int config_level(void) {
  char name[16];
  char *raw = getenv("LEVEL");
  int level;
  if (raw == 0) {
    return 0;
  }
  strcpy(name, raw);  // EXPECT: SEC.string.1
  if (isdigit(name[0])) {  // EXPECT: SEC.ctype.1
    level = atoi(name);
    if (level < 0 || level > 9) {
      return 0;
    }
    return level;
  }
  return 0;
}
