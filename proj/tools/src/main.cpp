#include <iostream>

#include "curvetopo_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return curvetopo::cli::run(args, std::cout, std::cerr);
}
