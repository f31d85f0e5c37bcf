#include <stdio.h>

int done(void) {
  char ch = getchar();
  return EOF == ch;  // EXPECT: SEC.eof.1
}
