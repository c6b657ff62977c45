#include <iostream>

#include "vanishlab/cli.hpp"

int main(int argc, char** argv) {
  return vanishlab::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr);
}
