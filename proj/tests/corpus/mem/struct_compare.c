#include <string.h>

struct S { int a; char b; };

int same(void) {
  struct S a;
  struct S b;
  return memcmp(&a, &b, sizeof a);  // EXPECT: SEC.mem.1
}
