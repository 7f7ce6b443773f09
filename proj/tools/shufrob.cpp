#include <iostream>
#include <string>
#include <vector>

#include "shufrob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return shufrob::cli::main(args, std::cout);
}
