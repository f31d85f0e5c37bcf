#include <stddef.h>

void f(int *a) {
  size_t s = sizeof(a);
}
