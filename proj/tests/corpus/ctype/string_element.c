#include <ctype.h>

int count_digits(const char *s) {
  int n = 0;
  int i;
  for (i = 0; s[i] != '\0'; i++) {
    if (isdigit(s[i])) {  // EXPECT: SEC.ctype.1
      n++;
    }
  }
  return n;
}
