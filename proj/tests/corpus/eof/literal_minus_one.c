int f(void) {
  char c = 'a';
  if (c == -1) {
    return 1;
  }
  return 0;
}
