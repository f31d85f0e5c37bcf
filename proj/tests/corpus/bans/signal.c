// PROFILE: restrictive
#include <signal.h>

void on_int(int sig);

void install(void) {
  signal(2, on_int);  // EXPECT: BAN.21_5
}
