#include <iostream>

#include "invariants/cli.hpp"

int main(int argc, char** argv) {
  return invariants::cli::run(argc, argv, std::cout, std::cerr);
}
