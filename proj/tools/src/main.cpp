#include <iostream>

#include "dodo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dodo::cli::run(args, std::cout, std::cerr);
}
