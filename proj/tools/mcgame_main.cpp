#include <iostream>
#include <string>
#include <vector>

#include "mcgame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mcgame::cli::run(args, std::cout, std::cerr);
}
