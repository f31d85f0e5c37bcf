#include <stddef.h>

size_t both(char x[8], char y[8]) {
  return sizeof x + sizeof y;  // EXPECT: SEC.sizeof.1 // EXPECT: SEC.sizeof.1
}
