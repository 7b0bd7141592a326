// Acceptance battery: placeholder until the criteria are wired in.
#include <cstdio>

int main() {
  std::printf("acceptance battery not yet implemented\n");
  return 1;
}
