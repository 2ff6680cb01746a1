#include <iostream>
#include <string>
#include <vector>

#include "concentra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return concentra::run_cli(args, std::cout, std::cerr);
}
