#include <iostream>

#include "lagrangia/cli.hpp"

int main(int argc, char** argv) {
  return lagrangia::cli::run_cli(argc, argv, std::cout, std::cerr);
}
