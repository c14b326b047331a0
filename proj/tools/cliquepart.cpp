#include <iostream>

#include "cliquepart/cli.hpp"

int main(int argc, char** argv) {
  return cliquepart::cli::run(argc, argv, std::cout, std::cerr);
}
