#include <iostream>
#include <string>
#include <vector>

#include "slipflow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slipflow::run_cli(args, std::cout, std::cerr);
}
