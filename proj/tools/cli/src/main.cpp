#include <iostream>
#include <string>
#include <vector>

#include "gq_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gq::cli::run(args, std::cout, std::cerr);
}
