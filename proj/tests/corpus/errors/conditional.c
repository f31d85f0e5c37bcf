// EXPECT-ERROR
#ifdef DEBUG
int debug = 1;
#endif
