#include <iostream>
#include <string>
#include <vector>

#include "severi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return severi::cli::run(args, std::cout, std::cerr);
}
