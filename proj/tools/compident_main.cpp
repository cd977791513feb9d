#include <iostream>
#include <string>
#include <vector>

#include "compident/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return compident::cli::run(args, std::cout, std::cerr);
}
