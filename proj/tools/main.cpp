#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  return pathstar::cli::run({argv, argv + argc}, std::cin, std::cout, std::cerr);
}
