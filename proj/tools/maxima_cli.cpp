#include <iostream>
#include <string>
#include <vector>

#include "maxima/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv, argv + argc);
  return maxima::cli_dispatch(args, std::cout, std::cerr);
}
