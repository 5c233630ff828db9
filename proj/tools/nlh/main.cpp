#include <iostream>

#include "nlh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlh::cli::run(args, std::cout, std::cerr);
}
