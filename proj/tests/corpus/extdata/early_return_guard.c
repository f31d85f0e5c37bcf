#include <stdlib.h>

int lookup(char *argv[]) {
  int table[16];
  int n = atoi(argv[1]);
  table[0] = 0;
  if (n > 15) {
    return -1;
  }
  return table[n];
}

int main(int argc, char *argv[]) { return lookup(argv); }
