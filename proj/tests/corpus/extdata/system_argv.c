#include <stdlib.h>

int main(int argc, char *argv[]) {
  if (argc < 2) {
    return 1;
  }
  return system(argv[1]);  // EXPECT: SEC.extdata.1
}
