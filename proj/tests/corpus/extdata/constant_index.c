int fill(void) {
  int a[4];
  int i;
  for (i = 0; i < 4; i++) {
    a[i] = i * 2;
  }
  return a[3];
}
