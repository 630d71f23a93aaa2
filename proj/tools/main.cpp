#include <iostream>

#include "skewdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewdual::cli::run(args, std::cout, std::cerr);
}
