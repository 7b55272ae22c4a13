#include <cstdio>

int main() {
  std::puts("prosomine: not yet wired");
  return 1;
}
