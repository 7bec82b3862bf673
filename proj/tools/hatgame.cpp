#include <iostream>
#include <string>
#include <vector>

#include "hatgame/cli/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hatgame::cli::run(args, std::cout, std::cerr);
}
