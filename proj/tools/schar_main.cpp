#include "schar/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return schar::run_cli(std::move(args), std::cout, std::cerr);
}
