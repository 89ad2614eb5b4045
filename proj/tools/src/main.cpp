#include <iostream>
#include <string>
#include <vector>

#include "meridian/harness.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return meridian::harness::run(args, std::cout, std::cerr);
}
