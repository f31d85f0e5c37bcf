// PROFILE: restrictive
/* Without the header, malloc is an implicit declaration, not the library function. */

int *make(int n) {
  int *p = malloc(n);
  return p;
}
