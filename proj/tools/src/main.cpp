#include <iostream>
#include <string>
#include <vector>

#include "lrembed_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lrembed::cli::run(args, std::cout, std::cerr);
}
