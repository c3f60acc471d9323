#include <iostream>
#include <string>
#include <vector>

#include "dblock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dblock::run(args, std::cout, std::cerr);
}
