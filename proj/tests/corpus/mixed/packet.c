#include <stdio.h>
#include <string.h>

struct header { char kind; int length; };

int read_packet(FILE *in, struct header *expected) {
  struct header h;
  unsigned char payload[64];
  fread(&h, sizeof h, 1, in);
  if (memcmp(&h, expected, sizeof h) != 0) {  // EXPECT: SEC.mem.1
    return -1;
  }
  fread(payload, 1, h.length, in);
  return payload[h.length];  // EXPECT: SEC.extdata.1
}
