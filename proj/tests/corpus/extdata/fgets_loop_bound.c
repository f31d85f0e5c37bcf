/* Line read from stdin drives a loop bound. */
#include <stdio.h>
#include <stdlib.h>

int sum_to_input(void) {
  char line[32];
  int n;
  int i;
  int sum = 0;
  fgets(line, sizeof line, stdin);
  n = atoi(line);
  for (i = 0; i < n; i++) {  // EXPECT: SEC.extdata.1
    sum = sum + i;
  }
  return sum;
}
