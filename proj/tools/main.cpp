#include <iostream>
#include <string>
#include <vector>

#include "hitchin_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hitchin::cli::run(args, std::cout, std::cerr);
}
