// PROFILE: restrictive
#include <signal.h>

void stop(void) {
  raise(15);  // EXPECT: BAN.21_5
}
