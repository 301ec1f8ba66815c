#include <iostream>

#include "grass_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  grass::cli::Result r = grass::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
