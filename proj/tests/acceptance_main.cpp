#include <cstring>
#include <iostream>

#include "hat/verify.hpp"

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--big") == 0) big = true;
  return hat::run_acceptance(std::cout, big) == 0 ? 0 : 1;
}
