#include <iostream>
#include <vector>

#include "loopforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loopforge::run_cli(std::move(args), std::cout, std::cerr);
}
