/* Validation on one branch only; the join is still tainted. */
#include <stdlib.h>

int main(int argc, char *argv[]) {
  int table[16];
  int n;
  int mode;
  n = atoi(argv[1]);
  mode = atoi(argv[2]);
  if (mode > 0) {
    if (n < 16) {
      mode = 1;
    }
  } else {
    mode = 2;
  }
  table[n] = mode;  // EXPECT: SEC.extdata.1
  return table[0];
}
