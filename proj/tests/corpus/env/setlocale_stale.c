#include <locale.h>
#include <stdlib.h>

void log_msg(const char *s);

void report(void) {
  char *loc = setlocale(0, 0);
  char *lang = getenv("LANG");
  log_msg(lang);
  log_msg(loc);  // EXPECT: SEC.env.2
}
