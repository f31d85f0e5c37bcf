#include <ctype.h>
#include <stdio.h>

int next_is_alpha(void) {
  int c = getchar();
  return isalpha(c);
}
