#include <stdio.h>

void fmt(int v) {
  char b[12];
  snprintf(b, sizeof b, "%d", v);
}
