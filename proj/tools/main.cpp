#include <iostream>

#include "toricjl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricjl::cli::run(args, std::cout, std::cerr);
}
