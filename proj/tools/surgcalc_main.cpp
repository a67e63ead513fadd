#include <iostream>
#include <vector>

#include "surgcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return surgcalc::cli::run(args, std::cout, std::cerr).exit_code;
}
