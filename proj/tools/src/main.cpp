#include <iostream>
#include <string>
#include <vector>

#include "veronese_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return veronese::cli::run(args, std::cout, std::cerr);
}
