#include <stdio.h>

int table[8];

void mark(void) {
  int k;
  scanf("%d", &k);
  table[k] = 1;  // EXPECT: SEC.extdata.1
}
