// EXPECT-ERROR
#define MAX(a, b) ((a) > (b) ? (a) : (b))

int f(int x) { return x; }
