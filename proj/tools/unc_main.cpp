#include <iostream>

#include "unc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unc::run(args, std::cout, std::cerr);
}
