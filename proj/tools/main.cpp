#include <iostream>

#include "liftenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liftenum::run_cli(args, std::cout, std::cerr);
}
