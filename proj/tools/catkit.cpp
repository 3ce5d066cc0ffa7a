#include <cstdio>

int main() {
  std::puts("catkit: not wired up yet");
  return 2;
}
