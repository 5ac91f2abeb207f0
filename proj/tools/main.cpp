#include <iostream>
#include <string>
#include <vector>

#include "arcfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arcfan::cli::dispatch(args, std::cout, std::cerr);
}
