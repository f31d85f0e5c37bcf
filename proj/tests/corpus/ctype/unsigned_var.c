#include <ctype.h>

int lower(unsigned char u) {
  return tolower(u);
}
