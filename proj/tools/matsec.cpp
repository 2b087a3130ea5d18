#include <iostream>
#include <vector>

#include "matsec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return matsec::run_cli(args, std::cout, std::cerr);
}
