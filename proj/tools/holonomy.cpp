#include <iostream>
#include <string>
#include <vector>

#include "holonomy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return holonomy::cli::run(args, std::cout, std::cerr);
}
