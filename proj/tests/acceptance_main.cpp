// Acceptance suite: one pass/fail line per criterion (placeholder while the
// library comes up; filled in below).
#include <cstdio>
int main() {
  std::printf("acceptance suite not yet wired\n");
  return 1;
}
